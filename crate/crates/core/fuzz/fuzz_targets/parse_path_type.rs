#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = tourneykit::parse_path_type(text) {
            let back = tourneykit::parse_path_type(&p.to_string()).expect("display parses");
            assert_eq!(back, p);
            assert_eq!(p.order(), p.arc_dirs().len() + 1);
            assert_eq!(p.dual().dual(), p);
            assert_eq!(p.reverse().reverse(), p);
        }
    }
});
