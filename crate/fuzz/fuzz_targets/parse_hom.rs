#![no_main]

use bialg::words::parse_hom;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((f, source, target)) = parse_hom(text, None, None) {
        let printed = target.format_hom(&source, &f);
        let (g, _, _) = parse_hom(&printed, Some(&source), Some(&target)).unwrap();
        assert_eq!(g, f);
    }
});
