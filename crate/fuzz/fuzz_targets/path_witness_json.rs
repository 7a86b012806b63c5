#![no_main]

use altpower::synth::PathWitness;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = PathWitness::from_json(text) {
        w.validate().expect("decoded witnesses are valid");
        let back = PathWitness::from_json(&w.to_json().to_string()).expect("re-encoding decodes");
        assert_eq!(back.vertices, w.vertices);
    }
});
