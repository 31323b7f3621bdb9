#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(c) = tourneykit::parse_cycle_type(text) {
            let back = tourneykit::parse_cycle_type(&c.to_string()).expect("display parses");
            assert_eq!(back, c);
            if c.order() <= 64 {
                // the canonical orientation string names the same type
                let again = tourneykit::CycleType::from_arc_dirs(&c.arc_dirs());
                assert_eq!(again, c);
                assert_eq!(c.dual().dual(), c);
            }
        }
    }
});
