#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(af) = argstable::parse_tgf(data) {
        let tgf = af.to_tgf();
        assert_eq!(argstable::parse_tgf(&tgf).expect("canonical TGF parses"), af);
        assert_eq!(argstable::parse_apx(&af.to_apx()).expect("canonical APX parses"), af);
    }
});
