//! Per-q data shared by every computation.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::arith::lcm;
use crate::chartab::CharDecomp;
use crate::cyclo::{gauss_periods, gauss_periods_trace, Cyc};
use crate::error::{Error, Result};
use crate::ffield::{
    make_field, special_elements, DiscreteLog, Field, GeneratorChoice, SpecialElements,
};
use crate::psl2::{classify_q, QInfo};

/// Construction options for [`HurwitzContext`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ContextOptions {
    pub generators: GeneratorChoice,
    /// For q = p^3, define the Gauss periods through the trace to GF(p).
    pub trace_gauss_periods: bool,
}

/// Everything derived from an admissible q.
#[derive(Debug)]
pub struct HurwitzContext {
    info: QInfo,
    field: Field,
    special: SpecialElements,
    options: ContextOptions,
    dlog: OnceLock<DiscreteLog>,
    periods: OnceLock<Result<(Cyc, Cyc)>>,
    induced: Mutex<HashMap<(u64, u64), CharDecomp>>,
}

impl HurwitzContext {
    pub fn new(q: u64) -> Result<Self> {
        Self::with_options(q, ContextOptions::default())
    }

    pub fn with_options(q: u64, options: ContextOptions) -> Result<Self> {
        let info = classify_q(q)?;
        let field = make_field(info.p, info.n)?;
        let special = special_elements(&field, options.generators)?;
        Ok(HurwitzContext {
            info,
            field,
            special,
            options,
            dlog: OnceLock::new(),
            periods: OnceLock::new(),
            induced: Mutex::new(HashMap::new()),
        })
    }

    pub fn info(&self) -> &QInfo {
        &self.info
    }

    pub fn q(&self) -> u64 {
        self.info.q
    }

    pub fn p(&self) -> u64 {
        self.info.p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn special(&self) -> &SpecialElements {
        &self.special
    }

    pub fn options(&self) -> ContextOptions {
        self.options
    }

    /// Discrete-log tables for eps and tau, built on first use.
    pub fn dlog(&self) -> &DiscreteLog {
        self.dlog
            .get_or_init(|| DiscreteLog::new(&self.field, self.special.eps, self.special.tau))
    }

    /// |G| = q(q^2 - 1)/2.
    pub fn order(&self) -> u64 {
        let q = self.q();
        q * (q * q - 1) / 2
    }

    pub fn genus(&self) -> u64 {
        1 + self.order() / 84
    }

    /// Conductor lcm(p, q - 1, q + 1) of a field holding every character value.
    pub fn conductor(&self) -> u64 {
        let q = self.q();
        lcm(self.p(), lcm(q - 1, q + 1))
    }

    /// The Gauss periods `(xi, xi')`.
    pub fn gauss_periods(&self) -> Result<(Cyc, Cyc)> {
        self.periods
            .get_or_init(|| {
                if self.info.n == 1 {
                    gauss_periods(self.q())
                } else if self.options.trace_gauss_periods {
                    Ok(gauss_periods_trace(&self.field))
                } else {
                    Err(Error::GaussPeriodsUnavailable(self.q()))
                }
            })
            .clone()
    }
}

impl HurwitzContext {
    /// Memoized `compute(l, k)` for induced characters.
    pub(crate) fn cached_induced(
        &self,
        l: u64,
        k: u64,
        compute: impl FnOnce() -> Result<CharDecomp>,
    ) -> Result<CharDecomp> {
        if let Some(d) = self.induced.lock().unwrap().get(&(l, k)) {
            return Ok(d.clone());
        }
        let d = compute()?;
        self.induced.lock().unwrap().insert((l, k), d.clone());
        Ok(d)
    }
}
