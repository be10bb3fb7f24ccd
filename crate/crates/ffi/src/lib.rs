//! C ABI for `fp5`.
//!
//! Every fallible function returns an [`Fp5Status`]; on failure a message
//! is available from [`fp5_last_error_message`] on the same thread.
//! Expressions and sets are opaque handles released with their `_free`
//! function. Strings returned by the library are released with
//! [`fp5_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fp5::algebra::{self, FrankParameter, UnitValue};
use fp5::decomposition::{self, BipolarPair, DecompositionError, PentaCoords};
use fp5::logic::{self, LogicExpr, PentaTruthValue};
use fp5::sets::{self, BipolarInputSet, FP5Set, Fp5Grade, FuzzySet, NormCouple, SetError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fp5Status {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    InvalidParameter = 3,
    PartitionViolation = 4,
    ParseError = 5,
    UnboundVariable = 6,
    UniverseMismatch = 7,
    ConstraintViolation = 8,
    DuplicateElement = 9,
    InvalidUtf8 = 10,
    Internal = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fp5Truth {
    True = 0,
    Indeterminate = 1,
    Undefined = 2,
    Contradictory = 3,
    False = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fp5InputKind {
    Fuzzy = 0,
    Intuitionistic = 1,
    Paraconsistent = 2,
    Bipolar = 3,
}

/// The five descriptors of one element.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Fp5PentaCoords {
    pub tau: f64,
    pub phi: f64,
    pub kappa: f64,
    pub pi: f64,
    pub iota: f64,
}

/// The four stored descriptors of an FP5 element; iota is derived.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Fp5Grade4 {
    pub tau: f64,
    pub phi: f64,
    pub kappa: f64,
    pub pi: f64,
}

/// Opaque parsed expression.
pub struct Fp5Expr(LogicExpr);

/// Opaque FP5 set.
pub struct Fp5Set {
    inner: FP5Set,
    ids: Vec<CString>,
}

impl Fp5Set {
    fn wrap(inner: FP5Set) -> Result<Self, Failure> {
        let ids = inner
            .universe()
            .iter()
            .map(|id| CString::new(id.as_str()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Failure::new(Fp5Status::InvalidUtf8, "element identifier contains NUL"))?;
        Ok(Fp5Set { inner, ids })
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("NULs replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

struct Failure {
    status: Fp5Status,
    message: String,
}

impl Failure {
    fn new(status: Fp5Status, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }

    fn null(what: &str) -> Self {
        Failure::new(Fp5Status::NullPointer, format!("{what} is NULL"))
    }
}

impl From<algebra::RangeError> for Failure {
    fn from(e: algebra::RangeError) -> Self {
        Failure::new(Fp5Status::OutOfRange, e.to_string())
    }
}

impl From<algebra::ParameterError> for Failure {
    fn from(e: algebra::ParameterError) -> Self {
        Failure::new(Fp5Status::InvalidParameter, e.to_string())
    }
}

impl From<DecompositionError> for Failure {
    fn from(e: DecompositionError) -> Self {
        let status = match e {
            DecompositionError::Range(_) => Fp5Status::OutOfRange,
            DecompositionError::PartitionViolation { .. } => Fp5Status::PartitionViolation,
            DecompositionError::NegativeResidual(_) => Fp5Status::Internal,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<SetError> for Failure {
    fn from(e: SetError) -> Self {
        let status = match e {
            SetError::DuplicateElement(_) => Fp5Status::DuplicateElement,
            SetError::Grade { .. } | SetError::ConstraintViolation { .. } | SetError::InputConstraint { .. } => {
                Fp5Status::ConstraintViolation
            }
            SetError::Range { .. } => Fp5Status::OutOfRange,
            SetError::UniverseMismatch { .. } => Fp5Status::UniverseMismatch,
        };
        Failure::new(status, e.to_string())
    }
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> Fp5Status {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => Fp5Status::Ok,
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("panic");
            set_last_error(message);
            Fp5Status::Internal
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn str_arg<'a>(text: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| Failure::new(Fp5Status::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn slice_arg<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(Failure::null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn ids_arg(ids: *const *const c_char, len: usize) -> Result<Vec<String>, Failure> {
    slice_arg(ids, len, "ids")?
        .iter()
        .map(|id| str_arg(*id, "element identifier").map(str::to_string))
        .collect()
}

fn coords_out(c: &PentaCoords) -> Fp5PentaCoords {
    Fp5PentaCoords {
        tau: c.tau(),
        phi: c.phi(),
        kappa: c.kappa(),
        pi: c.pi(),
        iota: c.iota(),
    }
}

fn truth_in(v: Fp5Truth) -> PentaTruthValue {
    PentaTruthValue::ALL[v as usize]
}

fn truth_out(v: PentaTruthValue) -> Fp5Truth {
    match v {
        PentaTruthValue::True => Fp5Truth::True,
        PentaTruthValue::Indeterminate => Fp5Truth::Indeterminate,
        PentaTruthValue::Undefined => Fp5Truth::Undefined,
        PentaTruthValue::Contradictory => Fp5Truth::Contradictory,
        PentaTruthValue::False => Fp5Truth::False,
    }
}

/// The last error message recorded on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn fp5_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn fp5_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

type Binary = fn(FrankParameter, UnitValue, UnitValue) -> UnitValue;

unsafe fn scalar(op: Binary, s: f64, x: f64, y: f64, out: *mut f64) -> Fp5Status {
    guard(|| {
        let value = op(FrankParameter::new(s)?, UnitValue::new(x)?, UnitValue::new(y)?);
        write(out, value.get(), "out")
    })
}

/// Frank t-norm. `s` is in `[0, INFINITY]`; 0, 1 and INFINITY select the
/// Min, product and Lukasiewicz limits.
#[no_mangle]
pub unsafe extern "C" fn fp5_tnorm(s: f64, x: f64, y: f64, out: *mut f64) -> Fp5Status {
    scalar(algebra::tnorm, s, x, y, out)
}

#[no_mangle]
pub unsafe extern "C" fn fp5_tconorm(s: f64, x: f64, y: f64, out: *mut f64) -> Fp5Status {
    scalar(algebra::tconorm, s, x, y, out)
}

/// The Frank t-norm with parameter `1/s`.
#[no_mangle]
pub unsafe extern "C" fn fp5_conjugate_tnorm(s: f64, x: f64, y: f64, out: *mut f64) -> Fp5Status {
    scalar(algebra::conjugate_tnorm, s, x, y, out)
}

#[no_mangle]
pub unsafe extern "C" fn fp5_decompose(s: f64, x: f64, y: f64, out: *mut Fp5PentaCoords) -> Fp5Status {
    guard(|| {
        let coords = decomposition::decompose(BipolarPair::new(x, y)?, FrankParameter::new(s)?)?;
        write(out, coords_out(&coords), "out")
    })
}

/// Closed-form decomposition for `s = 0`.
#[no_mangle]
pub unsafe extern "C" fn fp5_decompose_lg(x: f64, y: f64, out: *mut Fp5PentaCoords) -> Fp5Status {
    guard(|| {
        let coords = decomposition::decompose_lg(BipolarPair::new(x, y)?);
        write(out, coords_out(&coords), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn fp5_compose(coords: *const Fp5PentaCoords, x: *mut f64, y: *mut f64) -> Fp5Status {
    guard(|| {
        let c = coords.as_ref().ok_or_else(|| Failure::null("coords"))?;
        let pair = decomposition::compose(&PentaCoords::new(c.tau, c.phi, c.kappa, c.pi, c.iota)?);
        write(x, pair.x.get(), "x")?;
        write(y, pair.y.get(), "y")
    })
}

#[no_mangle]
pub extern "C" fn fp5_or(a: Fp5Truth, b: Fp5Truth) -> Fp5Truth {
    truth_out(logic::or5(truth_in(a), truth_in(b)))
}

#[no_mangle]
pub extern "C" fn fp5_and(a: Fp5Truth, b: Fp5Truth) -> Fp5Truth {
    truth_out(logic::and5(truth_in(a), truth_in(b)))
}

#[no_mangle]
pub extern "C" fn fp5_not(a: Fp5Truth) -> Fp5Truth {
    truth_out(logic::not5(truth_in(a)))
}

/// Parses `text`. On a syntax error `error_offset`, when not NULL,
/// receives the byte offset of the failure.
#[no_mangle]
pub unsafe extern "C" fn fp5_expr_parse(
    text: *const c_char,
    out: *mut *mut Fp5Expr,
    error_offset: *mut usize,
) -> Fp5Status {
    guard(|| {
        let text = str_arg(text, "text")?;
        match logic::parse_expr(text) {
            Ok(expr) => write(out, Box::into_raw(Box::new(Fp5Expr(expr))), "out"),
            Err(e) => {
                if !error_offset.is_null() {
                    error_offset.write(e.offset());
                }
                Err(Failure::new(Fp5Status::ParseError, e.to_string()))
            }
        }
    })
}

/// Evaluates `expr` under bindings such as `"a=T,b=C"`.
#[no_mangle]
pub unsafe extern "C" fn fp5_expr_eval(
    expr: *const Fp5Expr,
    assignment: *const c_char,
    out: *mut Fp5Truth,
) -> Fp5Status {
    guard(|| {
        let expr = expr.as_ref().ok_or_else(|| Failure::null("expr"))?;
        let env: logic::Assignment = str_arg(assignment, "assignment")?
            .parse()
            .map_err(|e: logic::AssignmentError| Failure::new(Fp5Status::InvalidParameter, e.to_string()))?;
        let value =
            logic::eval_expr(&expr.0, &env).map_err(|e| Failure::new(Fp5Status::UnboundVariable, e.to_string()))?;
        write(out, truth_out(value), "out")
    })
}

/// Prints `expr`; release the result with [`fp5_string_free`].
#[no_mangle]
pub unsafe extern "C" fn fp5_expr_to_string(expr: *const Fp5Expr) -> *mut c_char {
    match expr.as_ref() {
        Some(expr) => CString::new(expr.0.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn fp5_expr_free(expr: *mut Fp5Expr) {
    if !expr.is_null() {
        drop(Box::from_raw(expr));
    }
}

unsafe fn emit_set(set: FP5Set, out: *mut *mut Fp5Set) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("out"));
    }
    out.write(Box::into_raw(Box::new(Fp5Set::wrap(set)?)));
    Ok(())
}

/// Builds a set from `len` identifiers and `(tau, phi, kappa, pi)` grades.
#[no_mangle]
pub unsafe extern "C" fn fp5_set_new(
    ids: *const *const c_char,
    grades: *const Fp5Grade4,
    len: usize,
    out: *mut *mut Fp5Set,
) -> Fp5Status {
    guard(|| {
        let ids = ids_arg(ids, len)?;
        let grades = slice_arg(grades, len, "grades")?;
        let set = FP5Set::from_rows(
            ids.into_iter()
                .zip(grades.iter().map(|g| [g.tau, g.phi, g.kappa, g.pi])),
        )?;
        emit_set(set, out)
    })
}

/// Translates `(mu, nu)` arrays into an FP5 set. `nu` is ignored, and may
/// be NULL, for `FP5_INPUT_KIND_FUZZY`.
#[no_mangle]
pub unsafe extern "C" fn fp5_set_translate(
    kind: Fp5InputKind,
    ids: *const *const c_char,
    mu: *const f64,
    nu: *const f64,
    len: usize,
    out: *mut *mut Fp5Set,
) -> Fp5Status {
    guard(|| {
        let ids = ids_arg(ids, len)?;
        let mu = slice_arg(mu, len, "mu")?;
        let set = if kind == Fp5InputKind::Fuzzy {
            let elements = ids
                .into_iter()
                .zip(mu)
                .map(|(id, m)| Ok((id, UnitValue::new(*m)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            sets::from_fuzzy(&FuzzySet::new(elements)?)
        } else {
            let nu = slice_arg(nu, len, "nu")?;
            let input = BipolarInputSet::from_rows(ids.into_iter().zip(mu).zip(nu).map(|((id, m), n)| (id, *m, *n)))?;
            match kind {
                Fp5InputKind::Intuitionistic => sets::from_intuitionistic(&input)?,
                Fp5InputKind::Paraconsistent => sets::from_paraconsistent(&input)?,
                _ => sets::from_bipolar(&input),
            }
        };
        emit_set(set, out)
    })
}

unsafe fn binary_set(
    op: fn(&FP5Set, &FP5Set, NormCouple) -> Result<FP5Set, SetError>,
    a: *const Fp5Set,
    b: *const Fp5Set,
    couple: *const c_char,
    out: *mut *mut Fp5Set,
) -> Fp5Status {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| Failure::null("a"))?;
        let b = b.as_ref().ok_or_else(|| Failure::null("b"))?;
        let couple: NormCouple = str_arg(couple, "couple")?.parse()?;
        emit_set(op(&a.inner, &b.inner, couple)?, out)
    })
}

/// Union under `couple`: `"minmax"`, `"prod"`, `"luk"` or `"frank:<s>"`.
#[no_mangle]
pub unsafe extern "C" fn fp5_set_union(
    a: *const Fp5Set,
    b: *const Fp5Set,
    couple: *const c_char,
    out: *mut *mut Fp5Set,
) -> Fp5Status {
    binary_set(sets::union, a, b, couple, out)
}

#[no_mangle]
pub unsafe extern "C" fn fp5_set_intersection(
    a: *const Fp5Set,
    b: *const Fp5Set,
    couple: *const c_char,
    out: *mut *mut Fp5Set,
) -> Fp5Status {
    binary_set(sets::intersection, a, b, couple, out)
}

#[no_mangle]
pub unsafe extern "C" fn fp5_set_complement(a: *const Fp5Set, out: *mut *mut Fp5Set) -> Fp5Status {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| Failure::null("a"))?;
        emit_set(sets::complement(&a.inner), out)
    })
}

/// Number of elements; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn fp5_set_len(set: *const Fp5Set) -> usize {
    set.as_ref().map_or(0, |s| s.inner.len())
}

/// Identifier of element `index`, owned by the set; NULL when out of bounds.
#[no_mangle]
pub unsafe extern "C" fn fp5_set_element_id(set: *const Fp5Set, index: usize) -> *const c_char {
    set.as_ref()
        .and_then(|s| s.ids.get(index))
        .map_or(ptr::null(), |id| id.as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn fp5_set_get(set: *const Fp5Set, index: usize, out: *mut Fp5PentaCoords) -> Fp5Status {
    guard(|| {
        let set = set.as_ref().ok_or_else(|| Failure::null("set"))?;
        let (_, grade): (&str, Fp5Grade) = set.inner.iter().nth(index).ok_or_else(|| {
            Failure::new(
                Fp5Status::OutOfRange,
                format!("index {index} out of bounds for {} elements", set.inner.len()),
            )
        })?;
        write(out, coords_out(&grade.to_coords()), "out")
    })
}

/// Writes the inverse transform into `mu` and `nu`, each of length `len`
/// (which must equal the set's length).
#[no_mangle]
pub unsafe extern "C" fn fp5_set_to_bipolar(set: *const Fp5Set, mu: *mut f64, nu: *mut f64, len: usize) -> Fp5Status {
    guard(|| {
        let set = set.as_ref().ok_or_else(|| Failure::null("set"))?;
        if len != set.inner.len() {
            return Err(Failure::new(
                Fp5Status::OutOfRange,
                format!("buffers hold {len} values, set has {}", set.inner.len()),
            ));
        }
        if len > 0 && (mu.is_null() || nu.is_null()) {
            return Err(Failure::null("mu or nu"));
        }
        for (i, (_, pair)) in sets::to_bipolar(&set.inner).iter().enumerate() {
            write(mu.add(i), pair.x.get(), "mu")?;
            write(nu.add(i), pair.y.get(), "nu")?;
        }
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fp5_set_free(set: *mut Fp5Set) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}
