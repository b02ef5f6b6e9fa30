//! Shared, lazily computed covariants. Each value is computed at most once per
//! process (first caller initializes, later callers read), and the heavy ones
//! go through the disk cache when one is configured.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use binform_core::covariants::{hermite_from, Covariant, QuinticCatalog};
use binform_core::evectants::classical_evectant;
use binform_core::forms::Form;
use binform_core::hermite::{gamma_tau_at, k_tau, lambda_at, resultant_f_theta33, HermiteError, QPoint, TripleParams};
use binform_core::ring::Poly;

use crate::cache::{Cache, CacheKey};
use crate::serial::{decode_covariant, decode_form, decode_poly, encode_covariant, encode_form, encode_poly};

#[derive(Default)]
pub struct Engine {
    cache: Option<Cache>,
    catalog: OnceLock<QuinticCatalog>,
    hermite: OnceLock<Covariant>,
    hermite_evectant: OnceLock<Covariant>,
    resultant: OnceLock<Poly>,
    gamma_fq: OnceLock<Form>,
    k_tau: OnceLock<Result<Poly, HermiteError>>,
    lambda_fq: OnceLock<Form>,
    computed: AtomicUsize,
    hits: AtomicUsize,
}

impl Engine {
    pub fn new(cache: Option<Cache>) -> Engine {
        Engine { cache, ..Engine::default() }
    }

    pub fn cache(&self) -> Option<&Cache> {
        self.cache.as_ref()
    }

    /// Heavy values computed in this process.
    pub fn computed(&self) -> usize {
        self.computed.load(Ordering::Relaxed)
    }

    /// Heavy values served from disk.
    pub fn cache_hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    fn heavy<'a, T>(
        &self,
        cell: &'a OnceLock<T>,
        op: &str,
        compute: impl FnOnce() -> T,
        encode: fn(&T) -> String,
        decode: fn(&str) -> Option<T>,
    ) -> &'a T {
        cell.get_or_init(|| {
            let key = CacheKey::new(op, "quintic");
            if let Some(v) = self.cache.as_ref().and_then(|c| c.load(&key)).and_then(|s| decode(&s)) {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return v;
            }
            let v = compute();
            self.computed.fetch_add(1, Ordering::Relaxed);
            if let Some(c) = &self.cache {
                // a failed write only costs a recomputation next time
                let _ = c.store(&key, &encode(&v));
            }
            v
        })
    }

    pub fn catalog(&self) -> &QuinticCatalog {
        self.catalog.get_or_init(QuinticCatalog::new)
    }

    /// The degree-18 skew invariant.
    pub fn hermite(&self) -> &Covariant {
        self.heavy(&self.hermite, "hermite", || hermite_from(self.catalog()), encode_covariant, decode_covariant)
    }

    /// The evectant of the Hermite invariant, by direct differentiation.
    pub fn hermite_evectant(&self) -> &Covariant {
        self.heavy(
            &self.hermite_evectant,
            "hermite-evectant",
            || classical_evectant(self.hermite()).expect("H is a nonzero invariant"),
            encode_covariant,
            decode_covariant,
        )
    }

    /// `Res(F, theta33)` as a polynomial in `a0..a5`.
    pub fn resultant(&self) -> &Poly {
        self.heavy(&self.resultant, "resultant-f-theta33", || resultant_f_theta33(self.catalog()), encode_poly, decode_poly)
    }

    /// `Gamma_tau(F_Q)` with `q0, q1, q2, alpha, beta, gamma` symbolic.
    pub fn gamma_tau_fq(&self) -> &Form {
        self.heavy(
            &self.gamma_fq,
            "gamma-tau-fq",
            || gamma_tau_at(self.catalog(), &TripleParams::symbolic(), &QPoint::symbolic().fq()),
            encode_form,
            decode_form,
        )
    }

    /// `K_tau` recovered against the printed prefactor.
    pub fn k_tau(&self) -> Result<&Poly, &HermiteError> {
        let cell = &self.k_tau;
        let stored = self.heavy(
            cell,
            "k-tau",
            || k_tau(self.catalog()),
            |r| r.as_ref().map(encode_poly).unwrap_or_default(),
            |s| decode_poly(s).filter(|_| !s.is_empty()).map(Ok),
        );
        stored.as_ref()
    }

    /// `Lambda(F_Q)` with `q0, q1, q2` symbolic.
    pub fn lambda_fq(&self) -> &Form {
        self.heavy(
            &self.lambda_fq,
            "lambda-fq",
            || lambda_at(self.catalog(), &QPoint::symbolic().fq()),
            encode_form,
            decode_form,
        )
    }
}
