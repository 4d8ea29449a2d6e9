use std::ffi::{c_char, CStr, CString};
use std::ptr;

use realgw_ffi::*;

struct Engine(*mut RealgwEngine);

impl Engine {
    fn new() -> Self {
        Engine(realgw_engine_new())
    }

    fn error(&self) -> String {
        unsafe { CStr::from_ptr(realgw_engine_last_error(self.0)).to_string_lossy().into_owned() }
    }
}

impl Drop for Engine {
    fn drop(&mut self) {
        unsafe { realgw_engine_free(self.0) }
    }
}

fn take(s: *mut c_char) -> String {
    let v = unsafe { CStr::from_ptr(s).to_string_lossy().into_owned() };
    unsafe { realgw_string_free(s) };
    v
}

#[test]
fn real_invariant() {
    let e = Engine::new();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { realgw_gw_real(e.0, 2, 3, &mut out) }, RealgwStatus::Ok);
    assert_eq!(take(out), "-5/24");
    assert_eq!(e.error(), "");
    assert_eq!(unsafe { realgw_gw_real(e.0, 0, 0, &mut out) }, RealgwStatus::InvalidArgument);
    assert!(!e.error().is_empty());
}

#[test]
fn hodge() {
    let e = Engine::new();
    let mut out = ptr::null_mut();
    let psi = [1u32];
    assert_eq!(unsafe { realgw_hodge_integral(e.0, 1, psi.as_ptr(), 1, ptr::null(), 0, &mut out) }, RealgwStatus::Ok);
    assert_eq!(take(out), "1/24");
    let lam = [1u32, 1, 1];
    assert_eq!(unsafe { realgw_hodge_integral(e.0, 2, ptr::null(), 0, lam.as_ptr(), 3, &mut out) }, RealgwStatus::Ok);
    assert_eq!(take(out), "1/2880");
    assert_eq!(unsafe { realgw_hodge_integral(e.0, 1, ptr::null(), 0, ptr::null(), 0, &mut out) }, RealgwStatus::Unstable);
    assert_eq!(unsafe { realgw_hodge_integral(e.0, 1, ptr::null(), 1, ptr::null(), 0, &mut out) }, RealgwStatus::NullPointer);
}

#[test]
fn tables() {
    let e = Engine::new();
    let (mut gw, mut en, mut back) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(realgw_table_bundled(e.0, 2, false, &mut gw), RealgwStatus::Ok);
        assert_eq!(realgw_table_convert(e.0, gw, true, &mut en), RealgwStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(realgw_table_get(e.0, en, 2, 7, &mut out), RealgwStatus::Ok);
        assert_eq!(take(out), "-10");
        assert_eq!(realgw_table_get(e.0, en, 9, 9, &mut out), RealgwStatus::NotFound);
        assert_eq!(realgw_table_convert(e.0, gw, false, &mut back), RealgwStatus::TableMismatch);
        assert_eq!(realgw_table_convert(e.0, en, false, &mut back), RealgwStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        realgw_table_emit(e.0, gw, RealgwFormat::Csv, &mut a);
        realgw_table_emit(e.0, back, RealgwFormat::Csv, &mut b);
        assert_eq!(take(a), take(b));
        realgw_table_emit(e.0, gw, RealgwFormat::Markdown, &mut a);
        assert!(take(a).starts_with("| d |"));
        for t in [gw, en, back] {
            realgw_table_free(t);
        }
    }
}

#[test]
fn parse_errors() {
    let e = Engine::new();
    let mut t = ptr::null_mut();
    let good = CString::new("flavor,kind\nreal,E\ngenus,degree,value\n1,4,-1\n").unwrap();
    let bad = CString::new("flavor,kind\nreal,E\ngenus,degree,value\n1,4,x\n").unwrap();
    unsafe {
        assert_eq!(realgw_table_parse(e.0, good.as_ptr(), &mut t), RealgwStatus::Ok);
        realgw_table_free(t);
        assert_eq!(realgw_table_parse(e.0, bad.as_ptr(), &mut t), RealgwStatus::Parse);
        assert!(e.error().contains("line 4"), "{}", e.error());
        assert_eq!(realgw_table_parse(e.0, ptr::null(), &mut t), RealgwStatus::NullPointer);
        assert_eq!(realgw_table_bundled(e.0, 3, false, &mut t), RealgwStatus::InvalidArgument);
        assert_eq!(realgw_gw_real(ptr::null_mut(), 0, 1, &mut ptr::null_mut()), RealgwStatus::NullPointer);
        realgw_string_free(ptr::null_mut());
        realgw_table_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let src = std::env::temp_dir().join(format!("realgw-hdr-{}.c", std::process::id()));
    std::fs::write(&src, "#include \"realgw.h\"\nint main(void) { return REALGW_STATUS_OK; }\n").unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&src)
        .status();
    std::fs::remove_file(&src).ok();
    match status {
        Ok(s) => assert!(s.success()),
        Err(_) => eprintln!("no C compiler found, skipping"),
    }
}
