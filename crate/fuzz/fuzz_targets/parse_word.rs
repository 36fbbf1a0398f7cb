#![no_main]

use bialg::words::{parse_word, parse_word_inferred};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((w, alphabet)) = parse_word_inferred(text) {
        let printed = alphabet.format_word(&w);
        assert_eq!(parse_word(&printed, &alphabet).unwrap(), w);
    }
});
