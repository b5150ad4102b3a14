#![no_main]

use libfuzzer_sys::fuzz_target;
use opturan::search::cache::{format_record, parse_record};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((record, _)) = parse_record(text, 1) {
        let (again, _) = parse_record(&format_record(&record), 1).expect("formatted records parse");
        assert!(again.same_outcome(&record));
        let _ = record.validate();
    }
});
