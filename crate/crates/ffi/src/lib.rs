//! C ABI over `qbinom-core`.
//!
//! Polynomials cross the boundary as opaque `QbPoly` handles owned by the
//! caller and released with [`qb_poly_free`]. Strings returned through `char**`
//! out-parameters are heap allocated by Rust and released with
//! [`qb_string_free`]. Every fallible function returns a [`QbStatus`]; out
//! parameters are written only on `QB_STATUS_OK`.
//!
//! Coefficients are arbitrary precision, so they are exchanged as decimal
//! strings except in [`qb_poly_from_terms`], which accepts `int64_t`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qbinom_core::{
    pochhammer, pochhammer_reversed, qbinom, qbinom_oracle, reciprocal, Checker, Error, GridSpec,
    Identity, LaurentPoly, QMonomial, Rational,
};

/// Opaque handle to an exact Laurent polynomial in `q`.
pub struct QbPoly(LaurentPoly);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QbStatus {
    Ok = 0,
    NullPointer = 1,
    Overflow = 2,
    DivisionByZero = 3,
    InexactDivision = 4,
    EvalAtZero = 5,
    ZeroPolynomial = 6,
    InvalidArgument = 7,
    UnknownIdentity = 8,
    Parse = 9,
    InvalidUtf8 = 10,
    Panic = 11,
}

impl From<Error> for QbStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::DivisionByZero => QbStatus::DivisionByZero,
            Error::InexactDivision => QbStatus::InexactDivision,
            Error::EvalAtZero => QbStatus::EvalAtZero,
            Error::ZeroPolynomial => QbStatus::ZeroPolynomial,
            Error::Overflow => QbStatus::Overflow,
            Error::NonUnitCoefficient(_)
            | Error::ZeroArgument
            | Error::NonUnitConstantTerm
            | Error::InvalidArgument(_)
            | Error::InvalidRange(_) => QbStatus::InvalidArgument,
            Error::UnknownIdentity(_) => QbStatus::UnknownIdentity,
            Error::Parse(_) => QbStatus::Parse,
        }
    }
}

type FfiResult<T> = Result<T, QbStatus>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> QbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QbStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => QbStatus::Panic,
    }
}

unsafe fn poly_ref<'a>(p: *const QbPoly) -> FfiResult<&'a LaurentPoly> {
    p.as_ref().map(|h| &h.0).ok_or(QbStatus::NullPointer)
}

unsafe fn str_arg<'a>(s: *const c_char) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err(QbStatus::NullPointer);
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| QbStatus::InvalidUtf8)
}

unsafe fn put_poly(out: *mut *mut QbPoly, p: LaurentPoly) -> FfiResult<()> {
    if out.is_null() {
        return Err(QbStatus::NullPointer);
    }
    *out = Box::into_raw(Box::new(QbPoly(p)));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err(QbStatus::NullPointer);
    }
    // Rust-rendered text never contains NUL
    *out = CString::new(s).map_err(|_| QbStatus::Parse)?.into_raw();
    Ok(())
}

unsafe fn put<T>(out: *mut T, v: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(QbStatus::NullPointer);
    }
    *out = v;
    Ok(())
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn qb_status_message(status: QbStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        QbStatus::Ok => b"ok\0",
        QbStatus::NullPointer => b"null pointer argument\0",
        QbStatus::Overflow => b"exponent arithmetic overflowed\0",
        QbStatus::DivisionByZero => b"division by the zero polynomial\0",
        QbStatus::InexactDivision => b"divisor does not divide the dividend exactly\0",
        QbStatus::EvalAtZero => b"negative exponent evaluated at q = 0\0",
        QbStatus::ZeroPolynomial => b"operation undefined for the zero polynomial\0",
        QbStatus::InvalidArgument => b"invalid argument\0",
        QbStatus::UnknownIdentity => b"unknown identity name\0",
        QbStatus::Parse => b"parse error\0",
        QbStatus::InvalidUtf8 => b"string argument is not valid UTF-8\0",
        QbStatus::Panic => b"internal panic\0",
    };
    msg.as_ptr().cast()
}

/// `[n choose k]` for any integers.
///
/// # Safety
/// `out` must be a valid pointer to writable `QbPoly*` storage.
#[no_mangle]
pub unsafe extern "C" fn qb_binom(n: i64, k: i64, out: *mut *mut QbPoly) -> QbStatus {
    guard(|| put_poly(out, qbinom(n, k)?))
}

/// `[n choose k]` through the product-quotient path.
///
/// # Safety
/// `out` must be a valid pointer to writable `QbPoly*` storage.
#[no_mangle]
pub unsafe extern "C" fn qb_binom_oracle(n: i64, k: i64, out: *mut *mut QbPoly) -> QbStatus {
    guard(|| put_poly(out, qbinom_oracle(n, k)?))
}

/// `[n choose k]` with `q` replaced by `1/q`.
///
/// # Safety
/// `out` must be a valid pointer to writable `QbPoly*` storage.
#[no_mangle]
pub unsafe extern "C" fn qb_reciprocal(n: i64, k: i64, out: *mut *mut QbPoly) -> QbStatus {
    guard(|| put_poly(out, reciprocal(n, k)?))
}

/// `(c q^e; q)_k`.
///
/// # Safety
/// `out` must be a valid pointer to writable `QbPoly*` storage.
#[no_mangle]
pub unsafe extern "C" fn qb_pochhammer(
    coeff: i64,
    exp: i64,
    k: u32,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| put_poly(out, pochhammer(&QMonomial::new(coeff, exp), k)?))
}

/// Reversed form of `(c q^e; q)_k`; `c` must be 0 or +/-1.
///
/// # Safety
/// `out` must be a valid pointer to writable `QbPoly*` storage.
#[no_mangle]
pub unsafe extern "C" fn qb_pochhammer_reversed(
    coeff: i64,
    exp: i64,
    k: u32,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| put_poly(out, pochhammer_reversed(&QMonomial::new(coeff, exp), k)?))
}

/// Builds `sum coeffs[i] q^exps[i]`; duplicate exponents are summed.
///
/// # Safety
/// `exps` and `coeffs` must each point to `len` readable values (they may be
/// NULL when `len == 0`); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_from_terms(
    exps: *const i64,
    coeffs: *const i64,
    len: usize,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| {
        if len == 0 {
            return put_poly(out, LaurentPoly::zero());
        }
        if exps.is_null() || coeffs.is_null() {
            return Err(QbStatus::NullPointer);
        }
        let exps = std::slice::from_raw_parts(exps, len);
        let coeffs = std::slice::from_raw_parts(coeffs, len);
        put_poly(
            out,
            LaurentPoly::from_terms(exps.iter().copied().zip(coeffs.iter().copied())),
        )
    })
}

/// Parses the `{"terms":[{"exp":e,"coeff":"c"},...]}` form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_from_json(json: *const c_char, out: *mut *mut QbPoly) -> QbStatus {
    guard(|| {
        let p: LaurentPoly = serde_json::from_str(str_arg(json)?).map_err(|_| QbStatus::Parse)?;
        put_poly(out, p)
    })
}

/// # Safety
/// `p` must be a live handle or NULL; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_clone(p: *const QbPoly, out: *mut *mut QbPoly) -> QbStatus {
    guard(|| put_poly(out, poly_ref(p)?.clone()))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_add(
    a: *const QbPoly,
    b: *const QbPoly,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| put_poly(out, poly_ref(a)? + poly_ref(b)?))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_sub(
    a: *const QbPoly,
    b: *const QbPoly,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| put_poly(out, poly_ref(a)? - poly_ref(b)?))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_mul(
    a: *const QbPoly,
    b: *const QbPoly,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| put_poly(out, poly_ref(a)?.checked_mul(poly_ref(b)?)?))
}

/// Exact quotient `a / b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_exact_div(
    a: *const QbPoly,
    b: *const QbPoly,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| put_poly(out, poly_ref(a)?.exact_div(poly_ref(b)?)?))
}

/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_substitute_qinv(
    p: *const QbPoly,
    out: *mut *mut QbPoly,
) -> QbStatus {
    guard(|| put_poly(out, poly_ref(p)?.substitute_qinv()?))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_equal(
    a: *const QbPoly,
    b: *const QbPoly,
    out: *mut bool,
) -> QbStatus {
    guard(|| put(out, poly_ref(a)? == poly_ref(b)?))
}

/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_is_zero(p: *const QbPoly, out: *mut bool) -> QbStatus {
    guard(|| put(out, poly_ref(p)?.is_zero()))
}

/// Minimum and maximum exponent; `QB_STATUS_ZERO_POLYNOMIAL` for zero.
///
/// # Safety
/// `p` must be a live handle; `lo`, `hi` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_valuation_degree(
    p: *const QbPoly,
    lo: *mut i64,
    hi: *mut i64,
) -> QbStatus {
    guard(|| {
        if lo.is_null() || hi.is_null() {
            return Err(QbStatus::NullPointer);
        }
        let (v, d) = poly_ref(p)?.valuation_degree()?;
        *lo = v;
        *hi = d;
        Ok(())
    })
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_num_terms(p: *const QbPoly, out: *mut usize) -> QbStatus {
    guard(|| put(out, poly_ref(p)?.len()))
}

/// The `index`-th term in ascending exponent order; the coefficient is a
/// decimal string to be released with [`qb_string_free`].
///
/// # Safety
/// `p` must be a live handle; `exp` and `coeff` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_term(
    p: *const QbPoly,
    index: usize,
    exp: *mut i64,
    coeff: *mut *mut c_char,
) -> QbStatus {
    guard(|| {
        let (e, c) = poly_ref(p)?
            .terms()
            .nth(index)
            .ok_or(QbStatus::InvalidArgument)?;
        if exp.is_null() {
            return Err(QbStatus::NullPointer);
        }
        put_string(coeff, c.to_string())?;
        *exp = e;
        Ok(())
    })
}

/// Canonical text form, e.g. `q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_to_string(p: *const QbPoly, out: *mut *mut c_char) -> QbStatus {
    guard(|| put_string(out, poly_ref(p)?.to_string()))
}

/// JSON form `{"terms":[{"exp":e,"coeff":"c"},...]}`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_to_json(p: *const QbPoly, out: *mut *mut c_char) -> QbStatus {
    guard(|| put_string(out, poly_ref(p)?.to_json()))
}

/// Exact value at `q = q0`, with `q0` given as `"p"` or `"p/r"`; the result is
/// written in the same form.
///
/// # Safety
/// `p` must be a live handle; `q0` a NUL-terminated string; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_eval(
    p: *const QbPoly,
    q0: *const c_char,
    out: *mut *mut c_char,
) -> QbStatus {
    guard(|| {
        let x: Rational = str_arg(q0)?.parse()?;
        put_string(out, poly_ref(p)?.eval(&x)?.to_string())
    })
}

/// Runs one named identity (or `"all"`) over a grid.
///
/// `grid_json` may be NULL for the defaults, or an object such as
/// `{"a":[0,6],"n":[-2,2]}` overriding individual ranges. The report is the
/// JSON `IdentityReport` (an array of them for `"all"`).
///
/// # Safety
/// `identity` must be NUL-terminated; `grid_json` NUL-terminated or NULL;
/// `report_json` and `passed` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_check(
    identity: *const c_char,
    grid_json: *const c_char,
    report_json: *mut *mut c_char,
    passed: *mut bool,
) -> QbStatus {
    guard(|| {
        let name = str_arg(identity)?;
        let grid: GridSpec = if grid_json.is_null() {
            GridSpec::default()
        } else {
            serde_json::from_str(str_arg(grid_json)?).map_err(|_| QbStatus::Parse)?
        };
        if passed.is_null() {
            return Err(QbStatus::NullPointer);
        }
        let checker = Checker::default();
        let (json, ok) = if name == "all" {
            let reports = checker.run_all(&grid);
            let ok = reports.iter().all(|r| r.passed());
            (serde_json::to_string(&reports), ok)
        } else {
            let report = checker.run(Identity::from_name(name)?, &grid);
            let ok = report.passed();
            (serde_json::to_string(&report), ok)
        };
        put_string(report_json, json.map_err(|_| QbStatus::Parse)?)?;
        *passed = ok;
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `p` must be NULL or a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qb_poly_free(p: *mut QbPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
