//! C interface. Every call returns a [`RealgwStatus`]; on failure the message is
//! kept on the engine and read back with [`realgw_engine_last_error`].
//! Strings handed out by the library are released with [`realgw_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use realgw::convert::{self, Format, InvariantTable, Kind};
use realgw::hodge::{hodge_integral, HodgeQuery};
use realgw::localization::gw_real;
use realgw::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealgwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Unstable = 3,
    Parse = 4,
    MissingEntry = 5,
    TableMismatch = 6,
    NonConstant = 7,
    Arithmetic = 8,
    Io = 9,
    NotFound = 10,
    Panic = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealgwFormat {
    Csv = 0,
    Markdown = 1,
}

/// Holds the last error message. Not safe to share between threads.
pub struct RealgwEngine {
    last_error: CString,
}

/// One flavor/kind block of invariants.
pub struct RealgwTable {
    inner: InvariantTable,
}

fn status_of(e: &Error) -> RealgwStatus {
    match e {
        Error::DivisionByZero | Error::NonInvertibleSeries | Error::SeriesDomain(_) | Error::OddFirstChern(_) => {
            RealgwStatus::Arithmetic
        }
        Error::Unstable { .. } => RealgwStatus::Unstable,
        Error::MissingEntry { .. } => RealgwStatus::MissingEntry,
        Error::TableMismatch { .. } => RealgwStatus::TableMismatch,
        Error::Parse { .. } => RealgwStatus::Parse,
        Error::EvenFixedEdge(_) | Error::InvalidArgument(_) => RealgwStatus::InvalidArgument,
        Error::NonConstant { .. } => RealgwStatus::NonConstant,
        Error::Io(_) => RealgwStatus::Io,
    }
}

fn to_c(s: String) -> CString {
    CString::new(s.replace('\0', " ")).unwrap()
}

/// Runs `f`, recording any error or panic on the engine.
unsafe fn guarded(engine: *mut RealgwEngine, f: impl FnOnce() -> Result<(), (RealgwStatus, String)>) -> RealgwStatus {
    let Some(engine) = engine.as_mut() else {
        return RealgwStatus::NullPointer;
    };
    let (status, msg) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => (RealgwStatus::Ok, String::new()),
        Ok(Err(e)) => e,
        Err(_) => (RealgwStatus::Panic, "internal panic".to_string()),
    };
    engine.last_error = to_c(msg);
    status
}

fn fail(e: Error) -> (RealgwStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (RealgwStatus, String) {
    (RealgwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (RealgwStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = to_c(s).into_raw();
    Ok(())
}

unsafe fn put_table(out: *mut *mut RealgwTable, t: InvariantTable) -> Result<(), (RealgwStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(RealgwTable { inner: t }));
    Ok(())
}

unsafe fn slice<'a>(p: *const u32, n: usize) -> Result<&'a [u32], (RealgwStatus, String)> {
    if n == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null("array"))
    } else {
        Ok(std::slice::from_raw_parts(p, n))
    }
}

#[no_mangle]
pub extern "C" fn realgw_engine_new() -> *mut RealgwEngine {
    Box::into_raw(Box::new(RealgwEngine { last_error: CString::default() }))
}

/// # Safety
/// `engine` must come from [`realgw_engine_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn realgw_engine_free(engine: *mut RealgwEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Empty after a successful call. Valid until the next call on the same engine.
///
/// # Safety
/// `engine` must be a live engine or null.
#[no_mangle]
pub unsafe extern "C" fn realgw_engine_last_error(engine: *const RealgwEngine) -> *const c_char {
    match engine.as_ref() {
        Some(e) => e.last_error.as_ptr(),
        None => ptr::null(),
    }
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn realgw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Real invariant as a reduced fraction string such as `-5/24`.
///
/// # Safety
/// `engine` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn realgw_gw_real(engine: *mut RealgwEngine, genus: u32, degree: u32, out: *mut *mut c_char) -> RealgwStatus {
    guarded(engine, || {
        if degree == 0 {
            return Err((RealgwStatus::InvalidArgument, "degree must be positive".into()));
        }
        let v = gw_real(genus, degree).map_err(fail)?;
        put_string(out, v.to_string())
    })
}

/// Integral of psi and lambda classes over the moduli of genus `genus` curves
/// with `n_psi` marked points.
///
/// # Safety
/// `psi` and `lambda` must point to `n_psi` and `n_lambda` values (or be null when the count is 0).
#[no_mangle]
pub unsafe extern "C" fn realgw_hodge_integral(
    engine: *mut RealgwEngine,
    genus: u32,
    psi: *const u32,
    n_psi: usize,
    lambda: *const u32,
    n_lambda: usize,
    out: *mut *mut c_char,
) -> RealgwStatus {
    guarded(engine, || {
        let psi = slice(psi, n_psi)?.to_vec();
        let lambda = slice(lambda, n_lambda)?.to_vec();
        let q = HodgeQuery::new(genus, psi, lambda).map_err(fail)?;
        put_string(out, hodge_integral(&q).to_string())
    })
}

/// First block of a CSV text.
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn realgw_table_parse(engine: *mut RealgwEngine, text: *const c_char, out: *mut *mut RealgwTable) -> RealgwStatus {
    guarded(engine, || {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| (RealgwStatus::Parse, e.to_string()))?;
        let mut blocks = convert::parse_tables(text).map_err(fail)?;
        if blocks.is_empty() {
            return Err((RealgwStatus::Parse, "no table block found".into()));
        }
        put_table(out, blocks.swap_remove(0))
    })
}

/// Bundled table 1 (complex) or 2 (real); `enumerative` selects the E block.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn realgw_table_bundled(
    engine: *mut RealgwEngine,
    which: u32,
    enumerative: bool,
    out: *mut *mut RealgwTable,
) -> RealgwStatus {
    guarded(engine, || {
        let (gw, e) = convert::bundled(which).map_err(fail)?;
        put_table(out, if enumerative { e } else { gw })
    })
}

/// # Safety
/// `table` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn realgw_table_emit(
    engine: *mut RealgwEngine,
    table: *const RealgwTable,
    format: RealgwFormat,
    out: *mut *mut c_char,
) -> RealgwStatus {
    guarded(engine, || {
        let t = table.as_ref().ok_or_else(|| null("table"))?;
        let f = match format {
            RealgwFormat::Csv => Format::Csv,
            RealgwFormat::Markdown => Format::Markdown,
        };
        put_string(out, convert::emit_table(&t.inner, f))
    })
}

/// Entry at `(genus, degree)`; `NotFound` when absent.
///
/// # Safety
/// `table` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn realgw_table_get(
    engine: *mut RealgwEngine,
    table: *const RealgwTable,
    genus: u32,
    degree: u32,
    out: *mut *mut c_char,
) -> RealgwStatus {
    guarded(engine, || {
        let t = table.as_ref().ok_or_else(|| null("table"))?;
        match t.inner.get(genus, degree) {
            Some(v) => put_string(out, v.to_string()),
            None => Err((RealgwStatus::NotFound, format!("no entry at genus {genus}, degree {degree}"))),
        }
    })
}

/// Enumerative counts from a GW table, or the reverse when `to_enumerative` is false.
///
/// # Safety
/// `table` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn realgw_table_convert(
    engine: *mut RealgwEngine,
    table: *const RealgwTable,
    to_enumerative: bool,
    out: *mut *mut RealgwTable,
) -> RealgwStatus {
    guarded(engine, || {
        let t = table.as_ref().ok_or_else(|| null("table"))?;
        let want = if to_enumerative { Kind::Gw } else { Kind::E };
        if t.inner.kind != want {
            return Err((RealgwStatus::TableMismatch, format!("expected a {want} table, found {}", t.inner.kind)));
        }
        let r = if to_enumerative { convert::e_from_gw(&t.inner) } else { convert::gw_from_e(&t.inner) };
        put_table(out, r.map_err(fail)?)
    })
}

/// # Safety
/// `table` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn realgw_table_free(table: *mut RealgwTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}
