//! C ABI for the shortwords toolkit.
//!
//! Groups are opaque [`SwGroup`] handles. Every fallible call returns an
//! [`SwStatus`]; on failure [`sw_last_error_message`] describes the error.
//! Strings returned through out-parameters are owned by the caller and must be
//! released with [`sw_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use shortwords::perm::parse_generator_file;
use shortwords::shortwords::{get_short_gens, lookup_word, LookupOptions, SearchStatus, ShortGensOptions};
use shortwords::{Error, ErrorClass, GeneratorSet, PermGroup, Permutation};

/// A permutation group together with the named generators it was built from.
pub struct SwGroup {
    gens: GeneratorSet,
    group: PermGroup,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed permutation or generator-file text.
    Malformed = 3,
    /// A precondition failed, e.g. the element is not in the group.
    Precondition = 4,
    /// A search or enumeration limit was reached.
    Resource = 5,
    /// The result does not fit the output type.
    Overflow = 6,
    /// The search stopped before generating the target.
    Unfinished = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: SwStatus, message: &str) -> SwStatus {
    set_error(message);
    status
}

fn from_error(err: &Error) -> SwStatus {
    let status = match err.class() {
        ErrorClass::Malformed => SwStatus::Malformed,
        ErrorClass::Precondition => SwStatus::Precondition,
        ErrorClass::Resource => SwStatus::Resource,
    };
    fail(status, &err.to_string())
}

/// Runs `body`, turning panics into [`SwStatus::Panic`].
fn guard(body: impl FnOnce() -> SwStatus) -> SwStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => {
            if status == SwStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => fail(SwStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SwStatus> {
    if p.is_null() {
        return Err(fail(SwStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(SwStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn give_string(s: String, out: *mut *mut c_char) -> SwStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SwStatus::Ok
        }
        Err(_) => fail(SwStatus::Malformed, "result contains a NUL byte"),
    }
}

fn give_group(gens: GeneratorSet, out: *mut *mut SwGroup) -> SwStatus {
    let group = PermGroup::from_generators(gens.clone());
    unsafe { *out = Box::into_raw(Box::new(SwGroup { gens, group })) };
    SwStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! try_core {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return from_error(&err),
        }
    };
}

/// Builds a group from generator-file text (`degree n` followed by
/// `name = cycles` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sw_group_from_file_text(text: *const c_char, out: *mut *mut SwGroup) -> SwStatus {
    guard(|| {
        if out.is_null() {
            return fail(SwStatus::NullPointer, "null output pointer");
        }
        let text = try_status!(read_str(text));
        give_group(try_core!(parse_generator_file(text)), out)
    })
}

/// Builds a group on `degree` points from `count` generators in cycle
/// notation.
///
/// # Safety
/// `cycles` must point to `count` NUL-terminated strings and `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sw_group_from_cycles(
    degree: usize,
    cycles: *const *const c_char,
    count: usize,
    out: *mut *mut SwGroup,
) -> SwStatus {
    guard(|| {
        if out.is_null() || (cycles.is_null() && count > 0) {
            return fail(SwStatus::NullPointer, "null pointer argument");
        }
        if degree == 0 {
            return fail(SwStatus::Malformed, "degree must be positive");
        }
        let mut gens = Vec::with_capacity(count);
        for i in 0..count {
            let s = try_status!(read_str(*cycles.add(i)));
            gens.push(try_core!(Permutation::parse(s, degree)));
        }
        give_group(try_core!(GeneratorSet::new(degree, gens)), out)
    })
}

/// Releases a group handle. Passing null is a no-op.
///
/// # Safety
/// `group` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sw_group_free(group: *mut SwGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Number of points the group acts on, 0 for a null handle.
///
/// # Safety
/// `group` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sw_group_degree(group: *const SwGroup) -> usize {
    group.as_ref().map_or(0, |g| g.group.degree())
}

/// Writes the group order to `out`; [`SwStatus::Overflow`] if it exceeds
/// 64 bits.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sw_group_order(group: *const SwGroup, out: *mut u64) -> SwStatus {
    guard(|| {
        let (Some(g), false) = (group.as_ref(), out.is_null()) else {
            return fail(SwStatus::NullPointer, "null pointer argument");
        };
        match u64::try_from(g.group.order()) {
            Ok(n) => {
                *out = n;
                SwStatus::Ok
            }
            Err(_) => fail(SwStatus::Overflow, &format!("group order {} exceeds 64 bits", g.group.order())),
        }
    })
}

/// Membership test for an element in cycle notation.
///
/// # Safety
/// `group` must be a live handle, `element` a NUL-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sw_group_contains(group: *const SwGroup, element: *const c_char, out: *mut bool) -> SwStatus {
    guard(|| {
        let (Some(g), false) = (group.as_ref(), out.is_null()) else {
            return fail(SwStatus::NullPointer, "null pointer argument");
        };
        let x = try_core!(Permutation::parse(try_status!(read_str(element)), g.group.degree()));
        *out = try_core!(g.group.contains(&x));
        SwStatus::Ok
    })
}

/// A short word in the group's generators equal to `element`, rendered with
/// the generator names, e.g. `g1*g2^4*g1*g2^3`.
///
/// # Safety
/// `group` must be a live handle, `element` a NUL-terminated string and
/// `out_word` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sw_lookup_word(
    group: *const SwGroup,
    element: *const c_char,
    out_word: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let (Some(g), false) = (group.as_ref(), out_word.is_null()) else {
            return fail(SwStatus::NullPointer, "null pointer argument");
        };
        let x = try_core!(Permutation::parse(try_status!(read_str(element)), g.group.degree()));
        let res = try_core!(lookup_word(&g.gens, &x, &LookupOptions::default()));
        give_string(res.rendered, out_word)
    })
}

/// Short words in the generators of `group` whose values generate `target`,
/// one per line. `max_levels` bounds the word length searched (0 for no
/// bound); hitting it yields [`SwStatus::Unfinished`] together with the
/// partial list.
///
/// # Safety
/// `group` and `target` must be live handles and `out_words` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sw_get_short_gens(
    group: *const SwGroup,
    target: *const SwGroup,
    max_levels: usize,
    out_words: *mut *mut c_char,
) -> SwStatus {
    guard(|| {
        let (Some(g), Some(t), false) = (group.as_ref(), target.as_ref(), out_words.is_null()) else {
            return fail(SwStatus::NullPointer, "null pointer argument");
        };
        let opts = ShortGensOptions {
            iteration_limit: (max_levels > 0).then_some(max_levels),
            ..Default::default()
        };
        let res = try_core!(get_short_gens(&g.gens, &t.group, &opts));
        let status = give_string(res.rendered.join("\n"), out_words);
        if status == SwStatus::Ok && res.status == SearchStatus::Unfinished {
            return fail(SwStatus::Unfinished, "level limit reached before the target was generated");
        }
        status
    })
}

/// Releases a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next call into the library on the same
/// thread.
#[no_mangle]
pub extern "C" fn sw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
