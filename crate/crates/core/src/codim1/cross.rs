//! Lines of ℙ³ and the cross ratio of their intersections with the four
//! coordinate planes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::birmap::{MapError, QMatrix};
use crate::exactpoly::{Polynomial, Rational, RationalFunction, Ring};

/// The line through `p` and `q`. Coordinates are polynomials in constants
/// only, so a line may be symbolic.
#[derive(Clone, PartialEq, Eq)]
pub struct LineInP3 {
    p: [Polynomial; 4],
    q: [Polynomial; 4],
}

impl LineInP3 {
    pub fn new(p: [Polynomial; 4], q: [Polynomial; 4]) -> Result<LineInP3, MapError> {
        let ring = p[0].ring().clone();
        if p.iter().chain(&q).any(|c| c.ring() != &ring) {
            return Err(MapError::Poly(crate::exactpoly::PolyError::RingMismatch));
        }
        if ring.coords() != 0 {
            return Err(MapError::Other("line coordinates must be constants".into()));
        }
        let degenerate = (0..4).all(|i| (0..4).all(|j| (&p[i] * &q[j] - &p[j] * &q[i]).is_zero()));
        if degenerate {
            return Err(MapError::ProportionalPoints);
        }
        Ok(LineInP3 { p, q })
    }

    pub fn from_rationals(p: [Rational; 4], q: [Rational; 4]) -> Result<LineInP3, MapError> {
        let k = Ring::constants(&[] as &[&str]);
        LineInP3::new(p.map(|c| Polynomial::constant(&k, c)), q.map(|c| Polynomial::constant(&k, c)))
    }

    /// The line through `[p0:…:p3]` and `[q0:…:q3]` with all eight
    /// coordinates independent constants.
    pub fn general() -> LineInP3 {
        let k = Ring::constants(&["p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3"]);
        let v = |i: usize| Polynomial::var(&k, i);
        LineInP3 { p: [v(0), v(1), v(2), v(3)], q: [v(4), v(5), v(6), v(7)] }
    }

    pub fn ring(&self) -> &Ring {
        self.p[0].ring()
    }

    pub fn points(&self) -> (&[Polynomial; 4], &[Polynomial; 4]) {
        (&self.p, &self.q)
    }

    /// Image under the linear map `x ↦ m·x`.
    pub fn transform(&self, m: &QMatrix) -> Result<LineInP3, MapError> {
        if m.size() != 4 {
            return Err(MapError::ShapeMismatch);
        }
        let apply = |v: &[Polynomial; 4]| -> [Polynomial; 4] {
            core::array::from_fn(|i| {
                (0..4).fold(Polynomial::zero(v[0].ring()), |acc, j| &acc + &v[j].scale(m.get(i, j)))
            })
        };
        LineInP3::new(apply(&self.p), apply(&self.q))
    }
}

impl fmt::Debug for LineInP3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |v: &[Polynomial; 4]| {
            let parts: Vec<String> = v.iter().map(|c| format!("{c}")).collect();
            parts.join(" : ")
        };
        write!(f, "line([{}], [{}])", r(&self.p), r(&self.q))
    }
}

/// Cross ratio `(t₀,t₁;t₂,t₃) = (t₀−t₂)(t₁−t₃) / ((t₁−t₂)(t₀−t₃))` of the
/// parameters `tᵢ = −pᵢ/qᵢ` where `p + t·q` meets `xᵢ = 0`. Computed on
/// the homogeneous pairs `(−pᵢ, qᵢ)`, so a point at `t = ∞` is fine.
pub fn cross_ratio(line: &LineInP3) -> Result<RationalFunction, MapError> {
    let (p, q) = line.points();
    for i in 0..4 {
        if p[i].is_zero() && q[i].is_zero() {
            return Err(MapError::LineInHyperplane(i));
        }
    }
    // d(i, j) = aᵢbⱼ − aⱼbᵢ with (aᵢ, bᵢ) = (−pᵢ, qᵢ).
    let d = |i: usize, j: usize| &(&p[j] * &q[i]) - &(&p[i] * &q[j]);
    if [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)].iter().any(|&(i, j)| d(i, j).is_zero()) {
        return Err(MapError::CoincidentIntersections);
    }
    let parts = [d(0, 2), d(1, 3), d(1, 2), d(0, 3)];
    Ok(RationalFunction::new(&parts[0] * &parts[1], &parts[2] * &parts[3])?)
}

/// One of the six Möbius maps permuting the values of a cross ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Anharmonic {
    Identity,
    Inverse,
    OneMinus,
    InverseOfOneMinus,
    OverRMinusOne,
    OneMinusInverse,
}

impl Anharmonic {
    pub const ALL: [Anharmonic; 6] = [
        Anharmonic::Identity,
        Anharmonic::Inverse,
        Anharmonic::OneMinus,
        Anharmonic::InverseOfOneMinus,
        Anharmonic::OverRMinusOne,
        Anharmonic::OneMinusInverse,
    ];

    pub fn apply(self, r: &RationalFunction) -> Result<RationalFunction, MapError> {
        let one = RationalFunction::one(r.ring());
        Ok(match self {
            Anharmonic::Identity => r.clone(),
            Anharmonic::Inverse => r.inverse()?,
            Anharmonic::OneMinus => one.checked_sub(r)?,
            Anharmonic::InverseOfOneMinus => one.checked_sub(r)?.inverse()?,
            Anharmonic::OverRMinusOne => r.checked_div(&r.checked_sub(&one)?)?,
            Anharmonic::OneMinusInverse => r.checked_sub(&one)?.checked_div(r)?,
        })
    }

    /// Order as an element of the anharmonic group.
    pub fn order(self) -> u32 {
        match self {
            Anharmonic::Identity => 1,
            Anharmonic::Inverse | Anharmonic::OneMinus | Anharmonic::OverRMinusOne => 2,
            Anharmonic::InverseOfOneMinus | Anharmonic::OneMinusInverse => 3,
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Anharmonic::Identity => "r",
            Anharmonic::Inverse => "1/r",
            Anharmonic::OneMinus => "1 - r",
            Anharmonic::InverseOfOneMinus => "1/(1 - r)",
            Anharmonic::OverRMinusOne => "r/(r - 1)",
            Anharmonic::OneMinusInverse => "(r - 1)/r",
        }
    }

    /// The map `m` with `m(r) = s`, if any.
    pub fn relating(r: &RationalFunction, s: &RationalFunction) -> Result<Option<Anharmonic>, MapError> {
        for a in Anharmonic::ALL {
            if &a.apply(r)? == s {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }
}

/// How `cr ∘ m` relates to `cr` on the general line, for `m` in PGL₄.
pub fn anharmonic_action(m: &QMatrix) -> Result<Option<Anharmonic>, MapError> {
    let l = LineInP3::general();
    let r = cross_ratio(&l)?;
    let s = cross_ratio(&l.transform(m)?)?;
    Anharmonic::relating(&r, &s)
}

/// Permutation matrix of `[x_{π(0)} : … : x_{π(3)}]`.
pub fn coordinate_permutation(pi: [usize; 4]) -> QMatrix {
    let rows: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| (pi[i] == j) as i64).collect()).collect();
    let r: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    QMatrix::from_i64(&r)
}

/// `τ₁ = [x3 : x1 : x2 : x0]`.
pub fn tau1_p3() -> QMatrix {
    coordinate_permutation([3, 1, 2, 0])
}

/// `τ₂ = [x2 : x1 : x0 : x3]`.
pub fn tau2_p3() -> QMatrix {
    coordinate_permutation([2, 1, 0, 3])
}
