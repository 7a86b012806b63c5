#![no_main]

use altpower::notation::{parse_cycle_list, parse_cycles};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let _ = parse_cycle_list(text);
    let n = usize::from(n).max(1);
    if let Ok(x) = parse_cycles(text, n) {
        // canonical text parses back to the same permutation
        let again = parse_cycles(&x.to_string(), n).expect("canonical form parses");
        assert_eq!(again, x);
    }
});
