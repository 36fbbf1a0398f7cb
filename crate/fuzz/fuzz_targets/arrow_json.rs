#![no_main]

use bialg::HatArrow;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(a) = serde_json::from_slice::<HatArrow>(data) else {
        return;
    };
    let text = serde_json::to_string(&a).unwrap();
    assert_eq!(serde_json::from_str::<HatArrow>(&text).unwrap(), a);
    let nf = a.normal_form();
    assert_eq!(HatArrow::from_normal_form(&nf).unwrap(), a);
});
