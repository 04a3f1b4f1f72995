//! Top-degree differential forms `c·dx₁∧…∧dxₙ` in one affine chart, and
//! their pullback under rational self-maps of the chart.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::birmap::{AffineMap, MapError, QMatrix};
use crate::exactpoly::{q, Polynomial, RationalFunction, Ring};
use crate::gizatullin::{phi, phi_sigma, secant_cubic, Cr2Word, Sampler};
use crate::report::{Outcome, Suite};

/// `coefficient · dx_{a}∧…∧dx_{b}` over the affine coordinates of the
/// coefficient's ring, in ring order. `chart` is the homogeneous
/// coordinate set to 1.
#[derive(Clone, PartialEq, Eq)]
pub struct TopForm {
    chart: usize,
    coefficient: RationalFunction,
}

impl TopForm {
    pub fn new(chart: usize, coefficient: RationalFunction) -> TopForm {
        TopForm { chart, coefficient: coefficient.normalized() }
    }

    /// `dx₁∧…∧dxₙ`.
    pub fn unit(ring: &Ring, chart: usize) -> TopForm {
        TopForm::new(chart, RationalFunction::one(ring))
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn coefficient(&self) -> &RationalFunction {
        &self.coefficient
    }

    pub fn ring(&self) -> &Ring {
        self.coefficient.ring()
    }

    /// Number of wedge factors.
    pub fn dim(&self) -> usize {
        self.ring().coords()
    }

    /// `f*ω = (c∘f)·J(f)·dx`.
    pub fn pullback(&self, f: &AffineMap) -> Result<TopForm, MapError> {
        if f.dim() != self.dim() || f.source_dim() != self.dim() {
            return Err(MapError::ShapeMismatch);
        }
        let pulled = self.coefficient.substitute(f.components())?;
        let j = f.jacobian_det()?;
        let ring = pulled.ring().with_constants_of(j.ring());
        let c = pulled.embed(&ring)?.checked_mul(&j.embed(&ring)?)?;
        Ok(TopForm::new(self.chart, c))
    }

    /// Same chart and, after joining constants, the same coefficient.
    pub fn equal(&self, o: &TopForm) -> Result<bool, MapError> {
        if self.chart != o.chart || self.dim() != o.dim() {
            return Ok(false);
        }
        let ring = self.ring().with_constants_of(o.ring());
        Ok(self.coefficient.rename_coords(&ring)? == o.coefficient.rename_coords(&ring)?)
    }

    pub fn render(&self) -> String {
        let names = self.ring().coord_names();
        let wedge: Vec<String> = names.iter().map(|n| format!("d{n}")).collect();
        format!("({}) {}", self.coefficient, wedge.join("^"))
    }
}

impl fmt::Display for TopForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TopForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Index of the chart coordinate of the conic space used for `Ω`.
pub const OMEGA_CHART: usize = 5;

/// The secant cubic with `x5 = 1`, in `x0..x4`.
pub fn secant_cubic_in_chart() -> Polynomial {
    let ring = Ring::indexed("x", 5);
    let mut images: Vec<Polynomial> = (0..5).map(|i| Polynomial::var(&ring, i)).collect();
    images.push(Polynomial::one(&ring));
    secant_cubic().substitute(&images).expect("six images")
}

/// `Ω = dx0∧…∧dx4 / F̄²` in the chart `x5 = 1`.
pub fn omega() -> TopForm {
    let f = secant_cubic_in_chart();
    let c = RationalFunction::new(Polynomial::one(f.ring()), f.pow(2)).expect("nonzero");
    TopForm::new(OMEGA_CHART, c)
}

fn omega_preserved(f: &AffineMap) -> Result<Outcome, MapError> {
    let w = omega();
    let p = w.pullback(f)?;
    Ok(Outcome::expect(p.equal(&w)?, || format!("pullback is {p}")))
}

/// `Φ(w)` as a self-map of the chart `x5 = 1`.
pub fn phi_in_omega_chart(w: &Cr2Word) -> Result<AffineMap, MapError> {
    phi(w)?.to_affine_chart(OMEGA_CHART)
}

/// Invariance of `Ω` under `Φ(σ)`, `Φ([−X : −Y : Z])` and sampled linear
/// words.
pub fn omega_invariance_suite(seed: u64) -> Suite {
    let mut s = Suite::new("omega").with_seed(seed);
    s.add("phi-sigma", "Ω∘Φ(σ) = Ω", || omega_preserved(&phi_sigma().to_affine_chart(OMEGA_CHART)?));
    s.add("phi-sigma-chart", "Φ(σ) in the chart x5 = 1 is (x1, x0, x0x1/x2, x0x3/x2, x1x4/x2)", || {
        let m = phi_sigma().to_affine_chart(OMEGA_CHART)?;
        let want = "(x1, x0, x0*x1/x2, x0*x3/x2, x1*x4/x2)";
        Ok(Outcome::expect(m.render() == want, || m.render()))
    });
    s.add("phi-minus-minus-plus", "Φ(g) preserves Ω for g = [-X : -Y : Z]", || {
        let g = QMatrix::diagonal(&[q(-1), q(-1), q(1)]);
        omega_preserved(&phi_in_omega_chart(&Cr2Word::linear(&g)?)?)
    });
    let mut rng = Sampler::new(seed);
    for k in 0..3 {
        let w = rng.linear_word(3).then(&rng.mixing());
        s.add(format!("phi-linear-{k}"), "Φ of a linear word preserves Ω", move || {
            omega_preserved(&phi_in_omega_chart(&w)?)
        });
    }
    s.add("omega-pole-order", "the coefficient of Ω has a double pole along the secant cubic", || {
        let den = omega().coefficient().denominator().clone();
        let f = secant_cubic_in_chart();
        let ok = den.normalized() == f.pow(2).normalized();
        Ok(if ok { Outcome::pass_with("pole order 2 along F = 0") } else { Outcome::fail(format!("denominator {den}")) })
    });
    s
}
