#![no_main]

use altpower::notation::parse_cycles;
use altpower::synth::path_any;
use libfuzzer_sys::fuzz_target;

// Input: "<n>\n<from>\n<to>" with 52 <= n <= 200.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let mut lines = text.lines();
    let (Some(n), Some(a), Some(b)) = (lines.next(), lines.next(), lines.next()) else {
        return;
    };
    let Ok(n) = n.trim().parse::<usize>() else {
        return;
    };
    if !(52..=200).contains(&n) {
        return;
    }
    let (Ok(x), Ok(y)) = (parse_cycles(a, n), parse_cycles(b, n)) else {
        return;
    };
    if let Ok(w) = path_any(&x, &y, n) {
        w.validate().expect("synthesized paths validate");
        assert!(w.len() <= w.declared_bound);
        assert_eq!((w.from(), w.to()), (&x, &y));
    }
});
