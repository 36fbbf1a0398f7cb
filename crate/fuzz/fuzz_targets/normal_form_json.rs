#![no_main]

use bialg::{HatArrow, NormalForm};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(nf) = serde_json::from_slice::<NormalForm>(data) else {
        return;
    };
    let text = serde_json::to_string(&nf).unwrap();
    assert_eq!(serde_json::from_str::<NormalForm>(&text).unwrap(), nf);
    if let Ok(a) = HatArrow::from_normal_form(&nf) {
        assert_eq!(a.normal_form(), nf);
    }
});
