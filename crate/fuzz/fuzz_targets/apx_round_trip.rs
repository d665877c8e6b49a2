#![no_main]

use libfuzzer_sys::fuzz_target;

// Anything the parser accepts must survive serialization unchanged, in both formats.
fuzz_target!(|data: &str| {
    if let Ok(af) = argstable::parse_apx(data) {
        let apx = af.to_apx();
        assert_eq!(argstable::parse_apx(&apx).expect("canonical APX parses"), af);
        assert_eq!(argstable::parse_tgf(&af.to_tgf()).expect("canonical TGF parses"), af);
        assert_eq!(argstable::parse_apx(&apx).unwrap().to_apx(), apx);
    }
});
