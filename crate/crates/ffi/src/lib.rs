//! C ABI for `namematch`.
//!
//! A comparer is an opaque `NmComparer*` created with [`nm_comparer_new`] and
//! released with [`nm_comparer_free`]. Fallible calls return an [`NmStatus`];
//! on failure [`nm_last_error`] describes the problem. Strings returned
//! through `char**` out-parameters are owned by the caller and must be
//! released with [`nm_string_free`].
//!
//! A handle must not be used from two threads at once. Separate handles are
//! independent.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use namematch::{
    BaselineMethod, CompareParams, Error, Method, NameComparer, NumbersBehavior, SemanticKb,
    DEFAULT_WORD_THRESHOLD,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmStatus {
    Ok = 0,
    InvalidArgument = 1,
    /// A name has no words to match.
    EmptyResult = 2,
    /// Names not set yet.
    State = 3,
    Io = 4,
    Internal = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmMethod {
    Ordered = 0,
    Unordered = 1,
    Unedit = 2,
    OrderedWords = 3,
    UnorderedWords = 4,
    OrderedSemantic = 5,
    UnorderedSemantic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmBaseline {
    Lcs = 0,
    Levenshtein = 1,
    Damerau = 2,
    NormalizedLevenshtein = 3,
    Gestalt = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmNumbers {
    SeparateWord = 0,
    Ignore = 1,
    Leave = 2,
}

/// Matching parameters; start from [`nm_params_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct NmParams {
    pub min_len: usize,
    pub continuity_heavy_weight: bool,
    pub min_word_match_degree: f64,
    pub prefer_num_of_letters: bool,
    pub ignore_stop_words: bool,
}

/// Opaque comparer handle.
pub struct NmComparer {
    inner: NameComparer,
}

impl From<NmMethod> for Method {
    fn from(m: NmMethod) -> Self {
        match m {
            NmMethod::Ordered => Method::Ordered,
            NmMethod::Unordered => Method::Unordered,
            NmMethod::Unedit => Method::Unedit,
            NmMethod::OrderedWords => Method::OrderedWords,
            NmMethod::UnorderedWords => Method::UnorderedWords,
            NmMethod::OrderedSemantic => Method::OrderedSemantic,
            NmMethod::UnorderedSemantic => Method::UnorderedSemantic,
        }
    }
}

impl From<NmBaseline> for BaselineMethod {
    fn from(b: NmBaseline) -> Self {
        match b {
            NmBaseline::Lcs => BaselineMethod::Lcs,
            NmBaseline::Levenshtein => BaselineMethod::Levenshtein,
            NmBaseline::Damerau => BaselineMethod::Damerau,
            NmBaseline::NormalizedLevenshtein => BaselineMethod::NormalizedLevenshtein,
            NmBaseline::Gestalt => BaselineMethod::Gestalt,
        }
    }
}

impl From<NmNumbers> for NumbersBehavior {
    fn from(n: NmNumbers) -> Self {
        match n {
            NmNumbers::SeparateWord => NumbersBehavior::SeparateWord,
            NmNumbers::Ignore => NumbersBehavior::Ignore,
            NmNumbers::Leave => NumbersBehavior::Leave,
        }
    }
}

impl From<&NmParams> for CompareParams {
    fn from(p: &NmParams) -> Self {
        CompareParams {
            min_len: p.min_len,
            continuity_heavy_weight: p.continuity_heavy_weight,
            min_word_match_degree: p.min_word_match_degree,
            prefer_num_of_letters: p.prefer_num_of_letters,
            ignore_stop_words: p.ignore_stop_words,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(NmStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidArgument(_) => NmStatus::InvalidArgument,
            Error::EmptyResult(_) => NmStatus::EmptyResult,
            Error::State(_) => NmStatus::State,
            Error::Io { .. } => NmStatus::Io,
            Error::Internal(_) => NmStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

type FfiResult<T = ()> = Result<T, Failure>;

/// Runs `f`, recording any failure or panic.
fn guard(f: impl FnOnce() -> FfiResult) -> NmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            NmStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            NmStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(NmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(NmStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn comparer<'a>(c: *const NmComparer) -> FfiResult<&'a NameComparer> {
    c.as_ref().map(|c| &c.inner).ok_or_else(|| null("comparer"))
}

unsafe fn comparer_mut<'a>(c: *mut NmComparer) -> FfiResult<&'a mut NameComparer> {
    c.as_mut()
        .map(|c| &mut c.inner)
        .ok_or_else(|| null("comparer"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> FfiResult {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> FfiResult<*mut c_char> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(NmStatus::Internal, "string contains a NUL byte".into()))
}

/// Default parameters: `min_len` 2, threshold 2/3, everything else off.
#[no_mangle]
pub extern "C" fn nm_params_default() -> NmParams {
    NmParams {
        min_len: 2,
        continuity_heavy_weight: false,
        min_word_match_degree: DEFAULT_WORD_THRESHOLD,
        prefer_num_of_letters: false,
        ignore_stop_words: false,
    }
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn nm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn nm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn nm_comparer_new() -> *mut NmComparer {
    Box::into_raw(Box::new(NmComparer {
        inner: NameComparer::new(),
    }))
}

/// # Safety
/// `c` must come from [`nm_comparer_new`] and not be used afterwards. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn nm_comparer_free(c: *mut NmComparer) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle; names must be NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn nm_set_names(
    c: *mut NmComparer,
    name_1: *const c_char,
    name_2: *const c_char,
) -> NmStatus {
    guard(|| {
        let (a, b) = (text(name_1, "name_1")?, text(name_2, "name_2")?);
        Ok(comparer_mut(c)?.set_names(a, b)?)
    })
}

/// # Safety
/// As [`nm_set_names`].
#[no_mangle]
pub unsafe extern "C" fn nm_set_name_1(c: *mut NmComparer, name: *const c_char) -> NmStatus {
    guard(|| {
        let name = text(name, "name")?;
        Ok(comparer_mut(c)?.set_name_1(name)?)
    })
}

/// # Safety
/// As [`nm_set_names`].
#[no_mangle]
pub unsafe extern "C" fn nm_set_name_2(c: *mut NmComparer, name: *const c_char) -> NmStatus {
    guard(|| {
        let name = text(name, "name")?;
        Ok(comparer_mut(c)?.set_name_2(name)?)
    })
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nm_set_case_sensitivity(
    c: *mut NmComparer,
    case_sensitive: bool,
) -> NmStatus {
    guard(|| Ok(comparer_mut(c)?.set_case_sensitivity(case_sensitive)?))
}

/// Every character of `separators` becomes a word separator.
///
/// # Safety
/// `c` must be a live handle; `separators` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn nm_set_word_separators(
    c: *mut NmComparer,
    separators: *const c_char,
) -> NmStatus {
    guard(|| {
        let seps = text(separators, "separators")?;
        Ok(comparer_mut(c)?.set_word_separators(seps)?)
    })
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nm_set_support_camel_case(c: *mut NmComparer, enabled: bool) -> NmStatus {
    guard(|| Ok(comparer_mut(c)?.set_support_camel_case(enabled)?))
}

/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nm_set_numbers_behavior(
    c: *mut NmComparer,
    behavior: NmNumbers,
) -> NmStatus {
    guard(|| Ok(comparer_mut(c)?.set_numbers_behavior(behavior.into())?))
}

/// # Safety
/// `c` must be a live handle; `words` must point to `count` NUL-terminated
/// strings.
#[no_mangle]
pub unsafe extern "C" fn nm_set_stop_words(
    c: *mut NmComparer,
    words: *const *const c_char,
    count: usize,
) -> NmStatus {
    guard(|| {
        if words.is_null() && count > 0 {
            return Err(null("words"));
        }
        let list = (0..count)
            .map(|i| text(*words.add(i), "stop word"))
            .collect::<FfiResult<Vec<_>>>()?;
        Ok(comparer_mut(c)?.set_stop_words(list)?)
    })
}

/// Loads semantic data for the semantic methods. A NULL path falls back to
/// the data directory environment variable, then to the bundled data.
///
/// # Safety
/// `c` must be a live handle; paths NULL or NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn nm_load_semantic_data(
    c: *mut NmComparer,
    thesaurus_path: *const c_char,
    plural_exceptions_path: *const c_char,
) -> NmStatus {
    guard(|| {
        let opt = |p: *const c_char, what| {
            if p.is_null() {
                Ok(None)
            } else {
                text(p, what).map(Some)
            }
        };
        let thesaurus = opt(thesaurus_path, "thesaurus path")?;
        let plurals = opt(plural_exceptions_path, "plural exceptions path")?;
        let kb = SemanticKb::from_sources(
            thesaurus.map(std::path::Path::new),
            plurals.map(std::path::Path::new),
        )?;
        comparer_mut(c)?.set_kb(Arc::new(kb));
        Ok(())
    })
}

unsafe fn params_or_default(params: *const NmParams) -> CompareParams {
    params
        .as_ref()
        .map_or_else(CompareParams::default, CompareParams::from)
}

/// Compares the two names; the ratio is written to `out_ratio`. `params` may
/// be NULL for defaults.
///
/// # Safety
/// `c` must be a live handle; `params` NULL or valid; `out_ratio` valid.
#[no_mangle]
pub unsafe extern "C" fn nm_compare(
    c: *const NmComparer,
    method: NmMethod,
    params: *const NmParams,
    out_ratio: *mut f64,
) -> NmStatus {
    guard(|| {
        let r = comparer(c)?.compare(method.into(), &params_or_default(params))?;
        write_out(out_ratio, r.ratio)
    })
}

/// Like [`nm_compare`] but writes the full result as a JSON document.
///
/// # Safety
/// As [`nm_compare`]; free the string with [`nm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn nm_compare_json(
    c: *const NmComparer,
    method: NmMethod,
    params: *const NmParams,
    out_json: *mut *mut c_char,
) -> NmStatus {
    guard(|| {
        let r = comparer(c)?.compare(method.into(), &params_or_default(params))?;
        let json =
            serde_json::to_string(&r).map_err(|e| Failure(NmStatus::Internal, e.to_string()))?;
        if out_json.is_null() {
            return Err(null("output pointer"));
        }
        write_out(out_json, to_c_string(json)?)
    })
}

/// Classic measure on the normalized names.
///
/// # Safety
/// `c` must be a live handle; `out_score` valid.
#[no_mangle]
pub unsafe extern "C" fn nm_baseline(
    c: *const NmComparer,
    method: NmBaseline,
    out_score: *mut f64,
) -> NmStatus {
    guard(|| {
        let score = comparer(c)?.baseline(method.into())?;
        write_out(out_score, score)
    })
}

/// Normalized form of name 1 or 2 (`which`).
///
/// # Safety
/// `c` must be a live handle; free the string with [`nm_string_free`].
#[no_mangle]
pub unsafe extern "C" fn nm_normalized_name(
    c: *const NmComparer,
    which: u32,
    out: *mut *mut c_char,
) -> NmStatus {
    guard(|| {
        let (a, b) = comparer(c)?.get_norm_names();
        let name = pick(which, a, b)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        write_out(out, to_c_string(name)?)
    })
}

/// Words of name 1 or 2 (`which`) as a JSON array of strings.
///
/// # Safety
/// As [`nm_normalized_name`].
#[no_mangle]
pub unsafe extern "C" fn nm_words_json(
    c: *const NmComparer,
    which: u32,
    out: *mut *mut c_char,
) -> NmStatus {
    guard(|| {
        let (a, b) = comparer(c)?.get_words();
        let words = pick(which, a, b)?;
        let json = serde_json::to_string(&words)
            .map_err(|e| Failure(NmStatus::Internal, e.to_string()))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        write_out(out, to_c_string(json)?)
    })
}

fn pick<T>(which: u32, a: Option<T>, b: Option<T>) -> FfiResult<T> {
    let slot = match which {
        1 => a,
        2 => b,
        _ => {
            return Err(Failure(
                NmStatus::InvalidArgument,
                format!("name index must be 1 or 2, got {which}"),
            ))
        }
    };
    slot.ok_or_else(|| Failure(NmStatus::State, format!("name {which} is not set")))
}

/// # Safety
/// `s` must come from this library and not be used afterwards. NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn nm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
