#![no_main]

use bialg::fset::{from_ordered, to_ordered, FSetHatArrow, OrderedFibreArrow};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(a) = serde_json::from_slice::<FSetHatArrow>(data) {
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<FSetHatArrow>(&text).unwrap(), a);
        if let Ok(o) = to_ordered(&a) {
            assert_eq!(from_ordered(&o).unwrap(), a);
        }
    }
    if let Ok(o) = serde_json::from_slice::<OrderedFibreArrow>(data) {
        assert_eq!(to_ordered(&from_ordered(&o).unwrap()).unwrap(), o);
    }
});
