#![no_main]

use libfuzzer_sys::fuzz_target;
use opturan::graph6;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let records = graph6::decode_stream(text);
    let mut last = 0;
    for r in &records {
        assert!(r.line > last);
        last = r.line;
    }
    let graphs: Vec<_> = records.into_iter().filter_map(|r| r.graph.ok()).collect();
    let again = graph6::decode_stream(&graph6::encode_stream(&graphs));
    assert_eq!(again.len(), graphs.len());
    for (r, g) in again.iter().zip(&graphs) {
        assert_eq!(r.graph.as_ref().ok(), Some(g));
    }
});
