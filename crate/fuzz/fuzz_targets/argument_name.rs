#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(a) = data.parse::<argstable::Argument>() {
        assert_eq!(a.as_str(), data);
        let text = format!("arg({data}).");
        let af = argstable::parse_apx(&text).expect("a valid name declares an argument");
        assert!(af.contains(&a));
    }
});
