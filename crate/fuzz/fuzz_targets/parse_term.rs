#![no_main]

use bialg::Term;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(t) = Term::parse(text) else {
        return;
    };
    let printed = t.to_string();
    let back = Term::parse(&printed).expect("printed terms parse");
    assert_eq!(back.to_string(), printed);
    if t.generators() <= 64 {
        assert_eq!(back.eval().unwrap(), t.eval().unwrap());
    }
});
