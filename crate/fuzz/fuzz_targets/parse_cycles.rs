#![no_main]

use bialg::perm::{format_cycles, parse_cycles};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&degree, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let degree = usize::from(degree);
    if let Ok(p) = parse_cycles(text, degree) {
        assert_eq!(p.degree(), degree);
        assert_eq!(parse_cycles(&format_cycles(&p), degree).unwrap(), p);
    }
});
