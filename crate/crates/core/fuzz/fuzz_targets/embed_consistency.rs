#![no_main]
use libfuzzer_sys::fuzz_target;
use tourneykit::SearchConstraints;

// input: "<tournament line>\n<path type>"
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let mut lines = text.splitn(2, '\n');
    let (Some(tl), Some(pl)) = (lines.next(), lines.next()) else { return };
    let (Ok(t), Ok(p)) = (
        tourneykit::Tournament::parse(tl),
        tourneykit::parse_path_type(pl),
    ) else {
        return;
    };
    if t.order() > 9 || p.order() > t.order() {
        return;
    }
    if let Some(e) = tourneykit::find_path_embedding(&t, &p, &SearchConstraints::default()) {
        assert!(tourneykit::validate_path_embedding(&t, &p, &e.vertices));
        // the same vertices witness the dual type in the dual tournament
        assert!(tourneykit::validate_path_embedding(
            &t.dual(),
            &p.dual(),
            &e.vertices
        ));
    }
});
