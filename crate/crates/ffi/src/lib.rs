//! C ABI over `practicum`.
//!
//! Every function returns a [`PracticumStatus`] and writes results through
//! out-pointers. On failure the message is available from
//! [`practicum_last_error`] on the same thread. Strings handed out by this
//! library must be released with [`practicum_string_free`], sieve handles
//! with [`practicum_sieve_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use num_bigint::BigUint;
use practicum::arith::{factorize_u64, FactorBudget};
use practicum::practical::{
    is_practical, is_practical_oracle, is_practical_u64, sieve_practicals, PracticalBitmap,
    SieveConfig,
};
use practicum::progressions::classify_ap;
use practicum::quadratic::{classify_quadratic, mq, QuadraticPoly};
use practicum::representations::{decompose_square_plus_practical, goldbach_pair};
use practicum::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PracticumStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A work or memory budget was exceeded.
    Budget = 3,
    /// A result contradicted a proven statement.
    Falsification = 4,
    Io = 5,
    /// A panic was caught at the boundary.
    Internal = 6,
}

/// A practical-number bitmap.
pub struct PracticumSieve {
    bitmap: PracticalBitmap,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> PracticumStatus {
    match e {
        Error::Io(_) | Error::BadCache(_) => PracticumStatus::Io,
        Error::BudgetExceeded { .. }
        | Error::MemoryBudgetExceeded { .. }
        | Error::OracleBoundExceeded { .. }
        | Error::ScanBudgetExceeded { .. }
        | Error::IterationCap { .. }
        | Error::SearchExhausted { .. } => PracticumStatus::Budget,
        e if e.is_falsification() => PracticumStatus::Falsification,
        _ => PracticumStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Error>) -> PracticumStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PracticumStatus::Ok,
        Ok(Err(e)) => {
            let status = status_of(&e);
            set_error(e.to_string());
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PracticumStatus::Internal
        }
    }
}

fn null(name: &str) -> Error {
    Error::InvalidInput(format!("{name} is null"))
}

/// Writes `value` through `out`, which must be non-null.
unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Error> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn c_str<'a>(s: *const c_char, name: &str) -> Result<&'a str, Error> {
    if s.is_null() {
        return Err(null(name));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Error::InvalidInput(format!("{name} is not UTF-8")))
}

unsafe fn put_json<T: serde::Serialize>(out: *mut *mut c_char, v: &T) -> Result<(), Error> {
    let s = serde_json::to_string(v).expect("results serialize");
    put(out, CString::new(s).expect("JSON has no nul").into_raw())
}

fn with_null_check(ptrs: &[bool]) -> PracticumStatus {
    if ptrs.iter().any(|&p| p) {
        set_error("null pointer argument".into());
        PracticumStatus::NullPointer
    } else {
        PracticumStatus::Ok
    }
}

/// The last error message on this thread, or null. The pointer stays valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn practicum_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn practicum_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_is_practical(n: u64, out: *mut bool) -> PracticumStatus {
    if with_null_check(&[out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        put(out, is_practical_u64(n))
    })
}

/// σ(n); fails with `INVALID_ARGUMENT` if it does not fit in 64 bits.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_sigma(n: u64, out: *mut u64) -> PracticumStatus {
    if with_null_check(&[out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        let s = u64::try_from(factorize_u64(n).sigma())
            .map_err(|_| Error::InvalidInput(format!("σ({n}) exceeds 64 bits")))?;
        put(out, s)
    })
}

/// Subset-sum decision, refusing n above `bound`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_oracle(n: u64, bound: u64, out: *mut bool) -> PracticumStatus {
    if with_null_check(&[out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| put(out, is_practical_oracle(n, bound)?))
}

/// Stewart verdict for a decimal integer of any size, as JSON.
///
/// # Safety
/// `n` must be a nul-terminated string; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_verdict_json(
    n: *const c_char,
    out: *mut *mut c_char,
) -> PracticumStatus {
    if with_null_check(&[n.is_null(), out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let text = c_str(n, "n")?;
        let n: BigUint = text
            .parse()
            .map_err(|_| Error::InvalidInput(format!("not a non-negative integer: {text:?}")))?;
        put_json(out, &is_practical(&n, &FactorBudget::default())?)
    })
}

/// Classification of a·n + b as JSON.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_classify_ap_json(
    a: u64,
    b: u64,
    out: *mut *mut c_char,
) -> PracticumStatus {
    if with_null_check(&[out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let c = classify_ap(&BigUint::from(a), &BigUint::from(b), &FactorBudget::default())?;
        put_json(out, &c)
    })
}

/// m_q(p) for q = a·n² + b·n + c as JSON.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_mq_json(
    a: i64,
    b: i64,
    c: i64,
    p: u64,
    out: *mut *mut c_char,
) -> PracticumStatus {
    if with_null_check(&[out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let q = QuadraticPoly::new(a, b, c)?;
        let f = factorize_u64(p.max(1));
        if p < 2 || f.factors().len() != 1 || f.factors()[0].1 != 1 {
            return Err(Error::InvalidInput(format!("{p} is not a prime")));
        }
        put_json(out, &mq(&q, p))
    })
}

/// Practical-values classification of a·n² + b·n + c as JSON.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_classify_quadratic_json(
    a: i64,
    b: i64,
    c: i64,
    out: *mut *mut c_char,
) -> PracticumStatus {
    if with_null_check(&[out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let q = QuadraticPoly::new(a, b, c)?;
        put_json(out, &classify_quadratic(&q, &FactorBudget::default())?)
    })
}

/// n = x² + P with P practical, for n ≡ 1 (mod 8), n > 1.
///
/// # Safety
/// `x` and `practical_part` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_decompose(
    n: u64,
    x: *mut u64,
    practical_part: *mut u64,
) -> PracticumStatus {
    if with_null_check(&[x.is_null(), practical_part.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let d = decompose_square_plus_practical(&BigUint::from(n))?;
        // both parts are below n
        put(x, u64::try_from(d.x).expect("x < n"))?;
        put(practical_part, u64::try_from(d.practical_part).expect("P < n"))
    })
}

/// Smallest practical p1 ≤ p2 with p1 + p2 = n. `sieve` may be null.
///
/// # Safety
/// `sieve` must be null or a live handle; `p1`, `p2` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_goldbach(
    n: u64,
    sieve: *const PracticumSieve,
    p1: *mut u64,
    p2: *mut u64,
) -> PracticumStatus {
    if with_null_check(&[p1.is_null(), p2.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let bitmap = sieve.as_ref().map(|s| &s.bitmap);
        let pair = goldbach_pair(n, bitmap)?;
        put(p1, pair.p1)?;
        put(p2, pair.p2)
    })
}

/// Sieves practical numbers up to `limit`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_sieve_new(
    limit: u64,
    out: *mut *mut PracticumSieve,
) -> PracticumStatus {
    if with_null_check(&[out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let bitmap = sieve_practicals(limit, &SieveConfig::default())?;
        put(out, Box::into_raw(Box::new(PracticumSieve { bitmap })))
    })
}

/// Loads a bitmap written by [`practicum_sieve_save`] or the CLI.
///
/// # Safety
/// `path` must be a nul-terminated string; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_sieve_load(
    path: *const c_char,
    out: *mut *mut PracticumSieve,
) -> PracticumStatus {
    if with_null_check(&[path.is_null(), out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let bitmap = PracticalBitmap::load(Path::new(c_str(path, "path")?))?;
        put(out, Box::into_raw(Box::new(PracticumSieve { bitmap })))
    })
}

/// # Safety
/// `sieve` must be a live handle; `path` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn practicum_sieve_save(
    sieve: *const PracticumSieve,
    path: *const c_char,
) -> PracticumStatus {
    if with_null_check(&[sieve.is_null(), path.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| (*sieve).bitmap.save(Path::new(c_str(path, "path")?)))
}

/// The limit the sieve was built for.
///
/// # Safety
/// `sieve` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_sieve_limit(
    sieve: *const PracticumSieve,
    out: *mut u64,
) -> PracticumStatus {
    if with_null_check(&[sieve.is_null(), out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| put(out, (*sieve).bitmap.limit()))
}

/// Membership of n; fails for n outside [1, limit].
///
/// # Safety
/// `sieve` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_sieve_contains(
    sieve: *const PracticumSieve,
    n: u64,
    out: *mut bool,
) -> PracticumStatus {
    if with_null_check(&[sieve.is_null(), out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let bitmap = &(*sieve).bitmap;
        if n == 0 || n > bitmap.limit() {
            return Err(Error::InvalidInput(format!(
                "{n} is outside the sieve range [1, {}]",
                bitmap.limit()
            )));
        }
        put(out, bitmap.contains(n))
    })
}

/// P(x) for x up to the sieve limit.
///
/// # Safety
/// `sieve` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn practicum_sieve_count(
    sieve: *const PracticumSieve,
    x: u64,
    out: *mut u64,
) -> PracticumStatus {
    if with_null_check(&[sieve.is_null(), out.is_null()]) != PracticumStatus::Ok {
        return PracticumStatus::NullPointer;
    }
    guard(|| {
        let bitmap = &(*sieve).bitmap;
        if x > bitmap.limit() {
            return Err(Error::InvalidInput(format!(
                "{x} exceeds the sieve limit {}",
                bitmap.limit()
            )));
        }
        put(out, bitmap.count_up_to(x))
    })
}

/// Releases a sieve handle. Null is ignored.
///
/// # Safety
/// `sieve` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn practicum_sieve_free(sieve: *mut PracticumSieve) {
    if !sieve.is_null() {
        drop(Box::from_raw(sieve));
    }
}
