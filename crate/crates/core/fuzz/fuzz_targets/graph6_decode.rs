#![no_main]

use libfuzzer_sys::fuzz_target;
use opturan::graph6;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = graph6::decode_bytes(data) {
        assert!(g.is_well_formed());
        // the decoder is strict, so accepted input is already canonical
        assert_eq!(graph6::encode(&g).as_bytes(), data);
    }
});
