//! C ABI for `markoff-core`.
//!
//! Words and triples cross the boundary as opaque heap handles (`MkWord`,
//! `MkTriple`) that the caller releases with the matching `*_free`. Big
//! integers and rendered text cross as NUL-terminated decimal/UTF-8 strings
//! owned by the caller and released with [`mk_string_free`]. Every fallible
//! call returns an [`MkStatus`]; on failure [`mk_last_error`] describes the
//! most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use markoff_core::conjecture::injectivity_scan;
use markoff_core::{
    christoffel_word, cross_check, is_christoffel, markoff_number, markoff_tree, mu, render_path,
    standard_factorization, triple_of_word, word_of_triple, Error, MarkoffTriple, RenderFormat, Slope,
    Word,
};
use num_bigint::BigUint;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MkStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// Text argument could not be parsed (bad UTF-8, bad word, bad integer).
    InvalidArgument = 2,
    /// Input parsed but lies outside the operation's domain, e.g. a
    /// non-coprime slope, an improper word, or a non-Markoff triple.
    DomainError = 3,
    /// An internal consistency check failed.
    InvariantViolation = 4,
    /// A Rust panic was caught at the boundary.
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MkRenderFormat {
    Ascii = 0,
    Svg = 1,
}

/// Opaque word over {x, y}.
pub struct MkWord {
    inner: Word,
}

/// Opaque sorted Markoff triple.
pub struct MkTriple {
    inner: MarkoffTriple,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(MkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::ParseWord(_) | Error::Parse { .. } => MkStatus::InvalidArgument,
            Error::Invariant(_) => MkStatus::InvariantViolation,
            _ => MkStatus::DomainError,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(MkStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, converting errors and panics into a status plus last-error text.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            MkStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside markoff-core");
            MkStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MkStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn biguint_arg(p: *const c_char, what: &str) -> Result<BigUint, Failure> {
    let s = str_arg(p, what)?;
    s.parse()
        .map_err(|_| Failure(MkStatus::InvalidArgument, format!("{what} {s:?} is not a decimal integer")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(MkStatus::InvariantViolation, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the most recent failure on this thread, or "" after a
/// success. The pointer stays valid until the next `mk_*` call on the same
/// thread; do not free it.
#[no_mangle]
pub extern "C" fn mk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word from lowercase text over {x, y}.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_word_parse(text: *const c_char, out: *mut *mut MkWord) -> MkStatus {
    guard(|| {
        let inner: Word = str_arg(text, "text")?.parse()?;
        put(out, MkWord { inner })
    })
}

/// The Christoffel word with `p` x's and `q` y's (slope q/p).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_word_christoffel(p: u64, q: u64, out: *mut *mut MkWord) -> MkStatus {
    guard(|| {
        let inner = christoffel_word(Slope::new(p, q)?);
        put(out, MkWord { inner })
    })
}

/// # Safety
/// `word` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mk_word_free(word: *mut MkWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Number of letters; 0 for NULL.
///
/// # Safety
/// `word` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mk_word_len(word: *const MkWord) -> usize {
    word.as_ref().map_or(0, |w| w.inner.len())
}

/// # Safety
/// `word` must be a live handle; `out` must be writable. Free the result
/// with `mk_string_free`.
#[no_mangle]
pub unsafe extern "C" fn mk_word_to_string(word: *const MkWord, out: *mut *mut c_char) -> MkStatus {
    guard(|| put_string(out, handle(word, "word")?.inner.to_string()))
}

/// True when `word` is a Christoffel word; its letter counts are then
/// stored through `p` and `q` when those are non-NULL.
///
/// # Safety
/// `word` must be NULL or a live handle; `p`/`q` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn mk_word_is_christoffel(word: *const MkWord, p: *mut u64, q: *mut u64) -> bool {
    let Some(w) = word.as_ref() else { return false };
    match is_christoffel(&w.inner) {
        Some(slope) => {
            if !p.is_null() {
                *p = slope.p();
            }
            if !q.is_null() {
                *q = slope.q();
            }
            true
        }
        None => false,
    }
}

/// Standard factorization of a proper Christoffel word into two new handles.
///
/// # Safety
/// `word` must be a live handle; `out_w1`, `out_w2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_word_factor(
    word: *const MkWord,
    out_w1: *mut *mut MkWord,
    out_w2: *mut *mut MkWord,
) -> MkStatus {
    guard(|| {
        if out_w1.is_null() || out_w2.is_null() {
            return Err(null("output pointer"));
        }
        let (w1, w2) = standard_factorization(&handle(word, "word")?.inner)?.into_parts();
        put(out_w1, MkWord { inner: w1 })?;
        put(out_w2, MkWord { inner: w2 })
    })
}

/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_word_render(
    word: *const MkWord,
    format: MkRenderFormat,
    out: *mut *mut c_char,
) -> MkStatus {
    guard(|| {
        let format = match format {
            MkRenderFormat::Ascii => RenderFormat::Ascii,
            MkRenderFormat::Svg => RenderFormat::Svg,
        };
        put_string(out, render_path(&handle(word, "word")?.inner, format))
    })
}

/// μ(word) in the text form `[[e11,e12],[e21,e22]]`.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_word_mu(word: *const MkWord, out: *mut *mut c_char) -> MkStatus {
    guard(|| put_string(out, mu(&handle(word, "word")?.inner).to_string()))
}

/// ⅓Tr(μ(word)) as a decimal string. Non-Christoffel words usually fail
/// with `MK_STATUS_INVARIANT_VIOLATION`.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_word_markoff_number(word: *const MkWord, out: *mut *mut c_char) -> MkStatus {
    guard(|| put_string(out, markoff_number(&handle(word, "word")?.inner)?.to_string()))
}

/// Builds a triple from three decimal strings in any order.
///
/// # Safety
/// `a`, `b`, `c` must be valid NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_new(
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    out: *mut *mut MkTriple,
) -> MkStatus {
    guard(|| {
        let inner = MarkoffTriple::new(biguint_arg(a, "a")?, biguint_arg(b, "b")?, biguint_arg(c, "c")?)?;
        put(out, MkTriple { inner })
    })
}

/// Triple of a proper Christoffel word (the word is factorized internally).
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_of_word(word: *const MkWord, out: *mut *mut MkTriple) -> MkStatus {
    guard(|| {
        let w = &handle(word, "word")?.inner;
        if is_christoffel(w).is_none() {
            return Err(Error::NotChristoffel(w.to_string()).into());
        }
        let prov = triple_of_word(&standard_factorization(w)?)?;
        put(out, MkTriple { inner: prov.triple })
    })
}

/// The Christoffel word realizing a proper triple.
///
/// # Safety
/// `triple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_word(triple: *const MkTriple, out: *mut *mut MkWord) -> MkStatus {
    guard(|| {
        let fw = word_of_triple(&handle(triple, "triple")?.inner)?;
        put(out, MkWord { inner: fw.word() })
    })
}

/// # Safety
/// `triple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_flip_max(triple: *const MkTriple, out: *mut *mut MkTriple) -> MkStatus {
    guard(|| {
        let inner = handle(triple, "triple")?.inner.flip_max()?;
        put(out, MkTriple { inner })
    })
}

/// Entry `index` (0, 1 or 2, ascending) as a decimal string.
///
/// # Safety
/// `triple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_component(
    triple: *const MkTriple,
    index: usize,
    out: *mut *mut c_char,
) -> MkStatus {
    guard(|| {
        let t = &handle(triple, "triple")?.inner;
        let n = t
            .as_array()
            .get(index)
            .copied()
            .ok_or_else(|| Failure(MkStatus::InvalidArgument, format!("index {index} out of range")))?;
        put_string(out, n.to_string())
    })
}

/// `(a, b, c)`
///
/// # Safety
/// `triple` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_to_string(triple: *const MkTriple, out: *mut *mut c_char) -> MkStatus {
    guard(|| put_string(out, handle(triple, "triple")?.inner.to_string()))
}

/// False for NULL.
///
/// # Safety
/// `triple` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_is_proper(triple: *const MkTriple) -> bool {
    triple.as_ref().is_some_and(|t| t.inner.is_proper())
}

/// # Safety
/// `triple` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mk_triple_free(triple: *mut MkTriple) {
    if !triple.is_null() {
        drop(Box::from_raw(triple));
    }
}

/// All Markoff triples with maximum ≤ `bound`, as a JSON array of
/// three-string arrays.
///
/// # Safety
/// `bound` must be a valid NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mk_markoff_tree_json(bound: *const c_char, out: *mut *mut c_char) -> MkStatus {
    guard(|| {
        let triples = markoff_tree(&biguint_arg(bound, "bound")?);
        let json = serde_json::to_string(&triples).map_err(|e| Failure(MkStatus::InvariantViolation, e.to_string()))?;
        put_string(out, json)
    })
}

/// Collision report for the Christoffel tree down to `depth`, as JSON
/// `{bound, words_checked, distinct_numbers, collisions}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mk_injectivity_scan_json(depth: u32, out: *mut *mut c_char) -> MkStatus {
    guard(|| put_string(out, injectivity_scan(depth as usize)?.to_json()))
}

/// # Safety
/// `bound` must be a valid NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mk_cross_check(bound: *const c_char, out: *mut bool) -> MkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = cross_check(&biguint_arg(bound, "bound")?)?;
        Ok(())
    })
}
