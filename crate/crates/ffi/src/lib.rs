//! C ABI over `fdea-core`.
//!
//! Datasets live behind an opaque [`FdeaDataset`] handle. Every fallible
//! call returns an [`FdeaStatus`]; on failure a message is available from
//! [`fdea_last_error`] on the same thread. Strings returned by the library
//! must be released with [`fdea_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use fdea_core::report::{evaluate, write_report, EvalConfig, ModelKind, ReportFormat};
use fdea_core::{
    alphacut::alphacut_score, ccr_efficiency, io, mo, AlphaMode, Error, FuzzyDataset, MoConfig,
    SelfPolicy,
};

/// Opaque dataset handle.
pub struct FdeaDataset {
    inner: FuzzyDataset,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdeaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SchemaError = 4,
    ValueError = 5,
    IoError = 6,
    SolverFailure = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdeaPolicy {
    ExcludeSelf = 0,
    IncludeSelf = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdeaAlphaMode {
    Truncate = 0,
    Clamp = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdeaDataFormat {
    Json = 0,
    Csv = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdeaModel {
    Ccr = 0,
    Alpha = 1,
    Mo = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdeaReportFormat {
    Markdown = 0,
    Csv = 1,
    Json = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdeaMoConfig {
    pub alpha: f64,
    pub policy: FdeaPolicy,
    pub h_tol: f64,
    pub lp_tol: f64,
    pub alpha_mode: FdeaAlphaMode,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FdeaMoResult {
    pub h_star: f64,
    pub efficiency: f64,
    pub z_star: f64,
    pub iterations: u32,
    /// 1-based; 0 when produced by `fdea_solve_mo`.
    pub rank: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> FdeaStatus {
    match err {
        Error::Parse(_) => FdeaStatus::ParseError,
        Error::Schema(_) => FdeaStatus::SchemaError,
        Error::Value { .. } | Error::OrderingViolation { .. } | Error::NonFinite => {
            FdeaStatus::ValueError
        }
        Error::Io(_) => FdeaStatus::IoError,
        e if e.is_solver() => FdeaStatus::SolverFailure,
        _ => FdeaStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (FdeaStatus, String)>) -> FdeaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FdeaStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FdeaStatus::Panic
        }
    }
}

fn lift<T>(r: fdea_core::Result<T>) -> Result<T, (FdeaStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (FdeaStatus, String) {
    (FdeaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn dataset_ref<'a>(
    ds: *const FdeaDataset,
) -> Result<&'a FuzzyDataset, (FdeaStatus, String)> {
    ds.as_ref().map(|d| &d.inner).ok_or_else(|| null("dataset"))
}

fn policy(p: FdeaPolicy) -> SelfPolicy {
    match p {
        FdeaPolicy::ExcludeSelf => SelfPolicy::ExcludeSelf,
        FdeaPolicy::IncludeSelf => SelfPolicy::IncludeSelf,
    }
}

fn mo_config(cfg: &FdeaMoConfig) -> MoConfig {
    MoConfig {
        alpha: cfg.alpha,
        policy: policy(cfg.policy),
        h_tol: cfg.h_tol,
        lp_tol: cfg.lp_tol,
        alpha_mode: match cfg.alpha_mode {
            FdeaAlphaMode::Truncate => AlphaMode::Truncate,
            FdeaAlphaMode::Clamp => AlphaMode::Clamp,
        },
    }
}

fn into_c_string(s: String) -> Result<*mut c_char, (FdeaStatus, String)> {
    CString::new(s).map(CString::into_raw).map_err(|_| {
        (
            FdeaStatus::InvalidArgument,
            "string contains NUL".to_owned(),
        )
    })
}

/// Message of the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn fdea_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fdea_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a dataset from memory.
///
/// # Safety
/// `bytes` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_dataset_from_bytes(
    bytes: *const u8,
    len: usize,
    format: FdeaDataFormat,
    out: *mut *mut FdeaDataset,
) -> FdeaStatus {
    guard(|| {
        if bytes.is_null() {
            return Err(null("bytes"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let slice = std::slice::from_raw_parts(bytes, len);
        let fmt = match format {
            FdeaDataFormat::Json => io::DataFormat::Json,
            FdeaDataFormat::Csv => io::DataFormat::Csv,
        };
        let inner = lift(io::load_dataset(slice, fmt))?;
        *out = Box::into_raw(Box::new(FdeaDataset { inner }));
        Ok(())
    })
}

/// Reads a dataset file (format from the extension).
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_dataset_from_path(
    path: *const c_char,
    out: *mut *mut FdeaDataset,
) -> FdeaStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| (FdeaStatus::InvalidArgument, "path is not UTF-8".to_owned()))?;
        let inner = lift(io::load_path(Path::new(path)))?;
        *out = Box::into_raw(Box::new(FdeaDataset { inner }));
        Ok(())
    })
}

/// # Safety
/// `ds` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fdea_dataset_free(ds: *mut FdeaDataset) {
    if !ds.is_null() {
        drop(Box::from_raw(ds));
    }
}

/// Number of units; 0 for a NULL handle.
///
/// # Safety
/// `ds` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fdea_dataset_dmu_count(ds: *const FdeaDataset) -> usize {
    ds.as_ref().map_or(0, |d| d.inner.num_dmus())
}

/// Name of unit `index`, as a new string.
///
/// # Safety
/// `ds` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_dataset_dmu_name(
    ds: *const FdeaDataset,
    index: usize,
    out: *mut *mut c_char,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let dmu = data.dmus().get(index).ok_or((
            FdeaStatus::InvalidArgument,
            format!("unit index {index} out of range"),
        ))?;
        *out = into_c_string(dmu.name.clone())?;
        Ok(())
    })
}

/// Index of the unit called `name`.
///
/// # Safety
/// `ds` must be a live handle, `name` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_dataset_dmu_index(
    ds: *const FdeaDataset,
    name: *const c_char,
    out: *mut usize,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        if name.is_null() {
            return Err(null("name"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let name = CStr::from_ptr(name).to_string_lossy();
        *out = data.index_of(&name).ok_or((
            FdeaStatus::InvalidArgument,
            format!("no unit named '{name}'"),
        ))?;
        Ok(())
    })
}

/// Crisp CCR score of unit `p` on modal values.
///
/// # Safety
/// `ds` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_ccr_efficiency(
    ds: *const FdeaDataset,
    p: usize,
    self_policy: FdeaPolicy,
    out: *mut f64,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let modal = lift(data.modal())?;
        if p >= modal.num_dmus() {
            return Err((
                FdeaStatus::InvalidArgument,
                format!("unit index {p} out of range"),
            ));
        }
        *out = lift(ccr_efficiency(&modal, p, policy(self_policy)))?.efficiency;
        Ok(())
    })
}

/// Optimistic α-cut score of unit `p`.
///
/// # Safety
/// `ds` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_alphacut_score(
    ds: *const FdeaDataset,
    p: usize,
    alpha: f64,
    self_policy: FdeaPolicy,
    out: *mut f64,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = lift(alphacut_score(
            data,
            p,
            alpha,
            policy(self_policy),
            fdea_core::linprog::DEFAULT_TOL,
        ))?;
        Ok(())
    })
}

/// Best-case score z* of unit `p` over the full supports.
///
/// # Safety
/// `ds` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_z_star(
    ds: *const FdeaDataset,
    p: usize,
    self_policy: FdeaPolicy,
    out: *mut f64,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = lift(mo::z_star(data, p, policy(self_policy)))?;
        Ok(())
    })
}

/// Default multi-objective settings: α = 0, exclude self, truncate mode.
#[no_mangle]
pub extern "C" fn fdea_mo_config_default() -> FdeaMoConfig {
    let d = MoConfig::default();
    FdeaMoConfig {
        alpha: d.alpha,
        policy: FdeaPolicy::ExcludeSelf,
        h_tol: d.h_tol,
        lp_tol: d.lp_tol,
        alpha_mode: FdeaAlphaMode::Truncate,
    }
}

fn to_c_result(r: &mo::MoResult) -> FdeaMoResult {
    FdeaMoResult {
        h_star: r.h_star,
        efficiency: r.efficiency,
        z_star: r.z_star,
        iterations: r.iterations as u32,
        rank: r.rank as u32,
    }
}

/// Solves the multi-objective model for unit `p`.
///
/// # Safety
/// `ds` must be a live handle; `cfg` readable; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_solve_mo(
    ds: *const FdeaDataset,
    p: usize,
    cfg: *const FdeaMoConfig,
    out: *mut FdeaMoResult,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        let cfg = cfg.as_ref().ok_or_else(|| null("cfg"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_result(&lift(mo::solve_mo(data, p, &mo_config(cfg)))?);
        Ok(())
    })
}

/// Solves and ranks every unit. `out` must hold `capacity` results; on
/// success the first `fdea_dataset_dmu_count(ds)` entries are written in
/// input order.
///
/// # Safety
/// `ds` must be a live handle; `cfg` readable; `out` writable for
/// `capacity` elements.
#[no_mangle]
pub unsafe extern "C" fn fdea_evaluate_all(
    ds: *const FdeaDataset,
    cfg: *const FdeaMoConfig,
    out: *mut FdeaMoResult,
    capacity: usize,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        let cfg = cfg.as_ref().ok_or_else(|| null("cfg"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if capacity < data.num_dmus() {
            return Err((
                FdeaStatus::BufferTooSmall,
                format!("need {} slots, got {capacity}", data.num_dmus()),
            ));
        }
        let results = lift(mo::evaluate_all(data, &mo_config(cfg)))?;
        let slots = std::slice::from_raw_parts_mut(out, capacity);
        for (slot, r) in slots.iter_mut().zip(&results) {
            *slot = to_c_result(r);
        }
        Ok(())
    })
}

/// Renders a full report as a new string.
///
/// # Safety
/// `ds` must be a live handle; `alphas` readable for `alpha_count` values
/// (may be NULL when `alpha_count` is 0); `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fdea_report(
    ds: *const FdeaDataset,
    model: FdeaModel,
    alphas: *const f64,
    alpha_count: usize,
    cfg: *const FdeaMoConfig,
    format: FdeaReportFormat,
    out: *mut *mut c_char,
) -> FdeaStatus {
    guard(|| {
        let data = dataset_ref(ds)?;
        let cfg = cfg.as_ref().ok_or_else(|| null("cfg"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let alphas: &[f64] = if alpha_count == 0 {
            &[]
        } else if alphas.is_null() {
            return Err(null("alphas"));
        } else {
            std::slice::from_raw_parts(alphas, alpha_count)
        };
        let mo_cfg = mo_config(cfg);
        let eval = EvalConfig {
            model: match model {
                FdeaModel::Ccr => ModelKind::Ccr,
                FdeaModel::Alpha => ModelKind::Alpha,
                FdeaModel::Mo => ModelKind::Mo,
            },
            policy: mo_cfg.policy,
            alpha_mode: mo_cfg.alpha_mode,
            h_tol: mo_cfg.h_tol,
            lp_tol: mo_cfg.lp_tol,
        };
        let report = lift(evaluate(data, alphas, &eval))?;
        let fmt = match format {
            FdeaReportFormat::Markdown => ReportFormat::Markdown,
            FdeaReportFormat::Csv => ReportFormat::Csv,
            FdeaReportFormat::Json => ReportFormat::Json,
        };
        *out = into_c_string(write_report(&report, fmt))?;
        Ok(())
    })
}
