//! Scalar-linear self-maps of an algebra and their A★-linear normal forms.
//!
//! A map is stored as an `n x n` matrix whose column `j` holds the
//! coordinates of the image of `e_j`.
//!
//! On an associative unital algebra:
//!
//! | kind       | side    | defining law             | normal form    |
//! |------------|---------|--------------------------|----------------|
//! | linear     | `Left`  | `f(a x) = a f(x)`        | `f(x) = x b`   |
//! | linear     | `Right` | `f(x a) = f(x) a`        | `f(x) = b x`   |
//! | antilinear | `Left`  | `f(x a) = a* f(x)`       | `f(x) = x* b`  |
//! | antilinear | `Right` | `f(a x) = f(x) a*`       | `f(x) = b x*`  |
//!
//! In every case `b = f(1)`.

use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::algebra::{Algebra, Element};
use crate::conjugation::{conjugate, conjugation_matrix, has_conjugation};
use crate::error::Error;
use crate::exact::{Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    algebra: Algebra,
    matrix: RationalMatrix,
}

impl LinearMap {
    pub fn new(algebra: &Algebra, matrix: RationalMatrix) -> Result<Self, Error> {
        let n = algebra.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Shape(format!(
                "{}x{} matrix for an algebra of dimension {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self::from_matrix_unchecked(algebra, matrix))
    }

    pub(crate) fn from_matrix_unchecked(algebra: &Algebra, matrix: RationalMatrix) -> Self {
        Self {
            algebra: algebra.clone(),
            matrix,
        }
    }

    /// Tabulates `f` on the basis.
    pub fn from_fn(algebra: &Algebra, f: impl Fn(&Element) -> Element) -> Self {
        let n = algebra.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| f(&algebra.basis(j)).into_coords()).collect();
        let matrix = RationalMatrix::from_columns(n, &cols).expect("images have algebra dimension");
        Self::from_matrix_unchecked(algebra, matrix)
    }

    pub fn identity(algebra: &Algebra) -> Self {
        Self::from_matrix_unchecked(algebra, RationalMatrix::identity(algebra.dim()))
    }

    pub fn zero(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        Self::from_matrix_unchecked(algebra, RationalMatrix::zeros(n, n))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Result<Element, Error> {
        if *x.algebra() != self.algebra {
            return Err(Error::SpecMismatch);
        }
        let coords = self.matrix.mul_vec(x.coords())?;
        Ok(self.algebra.element_unchecked(coords))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, Error> {
        if inner.algebra != self.algebra {
            return Err(Error::SpecMismatch);
        }
        Ok(Self::from_matrix_unchecked(
            &self.algebra,
            self.matrix.matmul(&inner.matrix)?,
        ))
    }
}

/// `x ↦ a x`; column `k` is `a e_k`.
pub fn left_mult(a: &Element) -> LinearMap {
    LinearMap::from_fn(a.algebra(), |x| a * x)
}

/// `x ↦ x a`.
pub fn right_mult(a: &Element) -> LinearMap {
    LinearMap::from_fn(a.algebra(), |x| x * a)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Side {
    #[default]
    Left,
    Right,
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("side must be left or right, got {other:?}")),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A basis pair `(e_a, e_x)` at which the defining law fails: `lhs` is the
/// map applied to the product, `rhs` the product with the map's value.
#[derive(Clone, Debug, PartialEq)]
pub struct MapWitness {
    pub a: usize,
    pub x: usize,
    pub lhs: Element,
    pub rhs: Element,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    Accepted { generator: Element },
    Rejected(MapWitness),
}

impl Classification {
    pub fn generator(&self) -> Option<&Element> {
        match self {
            Classification::Accepted { generator } => Some(generator),
            Classification::Rejected(_) => None,
        }
    }
}

fn require_associative(algebra: &Algebra) -> Result<(), Error> {
    if algebra.is_associative() {
        Ok(())
    } else {
        Err(Error::NonAssociative(algebra.name().to_string()))
    }
}

fn require_conjugation(algebra: &Algebra) -> Result<(), Error> {
    if has_conjugation(algebra) {
        Ok(())
    } else {
        Err(Error::NoConjugation(algebra.name().to_string()))
    }
}

/// Scans basis pairs `(a, x)`, `a` outermost, for the first failure of the
/// law `lhs(e_a, e_x) == rhs(e_a, e_x)`.
fn scan(
    m: &LinearMap,
    law: impl Fn(&Element, &Element) -> (Element, Element),
) -> Option<MapWitness> {
    let alg = &m.algebra;
    let n = alg.dim();
    for a in 0..n {
        for x in 0..n {
            let (lhs, rhs) = law(&alg.basis(a), &alg.basis(x));
            if lhs != rhs {
                return Some(MapWitness { a, x, lhs, rhs });
            }
        }
    }
    None
}

fn ap(m: &LinearMap, x: &Element) -> Element {
    m.apply(x).expect("same algebra")
}

/// Decides A★-linearity on the given side and, if it holds, returns the
/// generator `b = f(1)`. Refuses non-associative algebras.
pub fn classify_linear(m: &LinearMap, side: Side) -> Result<Classification, Error> {
    require_associative(&m.algebra)?;
    let witness = match side {
        Side::Left => scan(m, |a, x| (ap(m, &(a * x)), a * &ap(m, x))),
        Side::Right => scan(m, |a, x| (ap(m, &(x * a)), &ap(m, x) * a)),
    };
    if let Some(w) = witness {
        return Ok(Classification::Rejected(w));
    }
    let b = ap(m, &m.algebra.one());
    assert_eq!(
        m.matrix,
        linear_coords(&b, side).matrix,
        "accepted map is not of normal form"
    );
    Ok(Classification::Accepted { generator: b })
}

/// Decides A★-antilinearity on the given side. Requires an associative
/// algebra with conjugation.
pub fn classify_antilinear(m: &LinearMap, side: Side) -> Result<Classification, Error> {
    require_associative(&m.algebra)?;
    require_conjugation(&m.algebra)?;
    let witness = match side {
        Side::Left => scan(m, |a, x| (ap(m, &(x * a)), &conjugate(a) * &ap(m, x))),
        Side::Right => scan(m, |a, x| (ap(m, &(a * x)), &ap(m, x) * &conjugate(a))),
    };
    if let Some(w) = witness {
        return Ok(Classification::Rejected(w));
    }
    let b = ap(m, &m.algebra.one());
    assert_eq!(
        m.matrix,
        antilinear_coords(&b, side)?.matrix,
        "accepted map is not of normal form"
    );
    Ok(Classification::Accepted { generator: b })
}

/// Matrix of the A★-linear map with generator `b`, straight from the
/// constants: `f^k_l = sum_j C^k_{lj} b^j` on the left side (`x ↦ x b`),
/// `f^k_l = sum_j C^k_{jl} b^j` on the right side (`x ↦ b x`).
pub fn linear_coords(b: &Element, side: Side) -> LinearMap {
    let alg = b.algebra();
    let n = alg.dim();
    let mut m = RationalMatrix::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            let mut acc = Rational::zero();
            for (j, bj) in b.coords().iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = match side {
                    Side::Left => alg.constant(l, j, k),
                    Side::Right => alg.constant(j, l, k),
                };
                acc += c * bj;
            }
            m.set(k, l, acc);
        }
    }
    LinearMap::from_matrix_unchecked(alg, m)
}

/// Matrix of the A★-antilinear map with generator `b`: the conjugation
/// matrix `I` followed by multiplication by `b`, so
/// `f^k_l = sum_m I^m_l (sum_j C^k_{mj} b^j)` on the left side.
pub fn antilinear_coords(b: &Element, side: Side) -> Result<LinearMap, Error> {
    let alg = b.algebra();
    require_conjugation(alg)?;
    let mult = linear_coords(b, side);
    let conj = conjugation_matrix(alg);
    let n = alg.dim();
    let mut m = RationalMatrix::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            let mut acc = Rational::zero();
            for mm in 0..n {
                let i = conj.matrix().get(mm, l);
                if !i.is_zero() {
                    acc += i * mult.matrix().get(k, mm);
                }
            }
            m.set(k, l, acc);
        }
    }
    Ok(LinearMap::from_matrix_unchecked(alg, m))
}
