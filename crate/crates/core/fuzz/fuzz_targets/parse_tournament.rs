#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(t) = tourneykit::Tournament::parse(text) {
            // serialization round-trips bit-exactly
            let line = t.to_line();
            let back = tourneykit::Tournament::parse(&line).expect("own output parses");
            assert_eq!(back, t);
            // canonical form is relabeling-invariant on its own output
            if t.order() <= 7 {
                assert_eq!(t.canonical_form(), back.canonical_form());
                assert_eq!(
                    t.dual().dual().canonical_form(),
                    t.canonical_form()
                );
            }
        }
    }
});
