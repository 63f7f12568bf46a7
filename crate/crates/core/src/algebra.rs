//! Finite-dimensional unital algebras given by structure constants.
//!
//! An algebra of dimension `n` has basis `e_0, ..., e_{n-1}` with `e_0` the
//! unit, and its product is fixed by the constants `C^k_{ij}`:
//!
//! ```text
//! e_i * e_j = sum_k C^k_{ij} e_k
//! ```
//!
//! [`AlgebraSpec`] is the raw, unchecked description. [`validate_spec`] turns
//! it into an [`Algebra`], a cheaply clonable handle that every [`Element`]
//! carries.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::exact::{Rational, RationalMatrix};

/// Unchecked algebra description. Constants are stored densely with
/// `C^k_{ij}` at index `(i * dim + j) * dim + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub constants: Vec<Rational>,
}

impl AlgebraSpec {
    /// A spec with all constants zero.
    pub fn zeroed(name: impl Into<String>, basis_names: Vec<String>) -> Self {
        let dim = basis_names.len();
        Self {
            name: name.into(),
            dim,
            basis_names,
            constants: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// A spec whose unit row and column already satisfy the unit axiom.
    pub fn with_unit(name: impl Into<String>, basis_names: Vec<String>) -> Self {
        let mut spec = Self::zeroed(name, basis_names);
        for j in 0..spec.dim {
            spec.set_constant(0, j, j, Rational::one());
            spec.set_constant(j, 0, j, Rational::one());
        }
        spec
    }

    /// Builds a spec from the coordinates of every basis product `e_i * e_j`.
    pub fn from_products(
        name: impl Into<String>,
        basis_names: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Self {
        let mut spec = Self::zeroed(name, basis_names);
        let n = spec.dim;
        for i in 0..n {
            for j in 0..n {
                let coords = product(i, j);
                assert_eq!(coords.len(), n, "product e_{i}*e_{j} has wrong length");
                for (k, c) in coords.into_iter().enumerate() {
                    spec.set_constant(i, j, k, c);
                }
            }
        }
        spec
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// `C^k_{ij}`, the coefficient of `e_k` in `e_i * e_j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[self.index(i, j, k)]
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let idx = self.index(i, j, k);
        self.constants[idx] = value;
    }
}

/// Checks shape consistency and the unit axiom `C^k_{0j} = C^k_{j0} = δ^k_j`.
///
/// Unit violations are reported for the first triple `(i, j, k)` in
/// lexicographic order with `i = 0` or `j = 0`.
pub fn validate_spec(raw: AlgebraSpec) -> Result<Algebra, Error> {
    let n = raw.dim;
    if n == 0 {
        return Err(Error::InvalidSpec("dimension must be at least 1".into()));
    }
    if raw.basis_names.len() != n {
        return Err(Error::InvalidSpec(format!(
            "{} basis names for dimension {n}",
            raw.basis_names.len()
        )));
    }
    if let Some(i) = raw.basis_names.iter().position(|s| s.trim().is_empty()) {
        return Err(Error::InvalidSpec(format!("basis name {i} is empty")));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = raw.basis_names.iter().find(|s| !seen.insert(s.as_str())) {
        return Err(Error::InvalidSpec(format!("duplicate basis name {dup:?}")));
    }
    if raw.constants.len() != n * n * n {
        return Err(Error::InvalidSpec(format!(
            "{} constants for dimension {n}, expected {}",
            raw.constants.len(),
            n * n * n
        )));
    }
    for i in 0..n {
        for j in 0..n {
            if i != 0 && j != 0 {
                continue;
            }
            let other = if i == 0 { j } else { i };
            for k in 0..n {
                let expected = if k == other {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                let value = raw.constant(i, j, k);
                if *value != expected {
                    return Err(Error::UnitAxiom {
                        i,
                        j,
                        k,
                        value: Box::new(value.clone()),
                        expected: Box::new(expected),
                    });
                }
            }
        }
    }
    Ok(Algebra(Arc::new(Inner {
        spec: raw,
        associativity: OnceLock::new(),
        conjugation_ok: OnceLock::new(),
    })))
}

struct Inner {
    spec: AlgebraSpec,
    associativity: OnceLock<Option<(usize, usize, usize)>>,
    conjugation_ok: OnceLock<bool>,
}

/// A validated unital algebra. Clones share the same constants.
#[derive(Clone)]
pub struct Algebra(Arc<Inner>);

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("name", &self.name())
            .field("basis", &self.basis_names())
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.0.spec
    }

    pub fn name(&self) -> &str {
        &self.0.spec.name
    }

    pub fn dim(&self) -> usize {
        self.0.spec.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.0.spec.basis_names
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.0.spec.basis_names[i]
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names().iter().position(|s| s == name)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.0.spec.constant(i, j, k)
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element, Error> {
        if coords.len() != self.dim() {
            return Err(Error::Shape(format!(
                "{} coordinates for dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        Ok(Element {
            algebra: self.clone(),
            coords,
        })
    }

    pub(crate) fn element_unchecked(&self, coords: Vec<Rational>) -> Element {
        debug_assert_eq!(coords.len(), self.dim());
        Element {
            algebra: self.clone(),
            coords,
        }
    }

    pub fn zero(&self) -> Element {
        self.element_unchecked(vec![Rational::zero(); self.dim()])
    }

    pub fn one(&self) -> Element {
        self.basis(0)
    }

    /// `e_i`. Panics if `i >= dim`.
    pub fn basis(&self, i: usize) -> Element {
        assert!(i < self.dim(), "basis index {i} out of range");
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[i] = Rational::one();
        self.element_unchecked(coords)
    }

    /// The scalar `c` viewed as `c * e_0`.
    pub fn embed_scalar(&self, c: Rational) -> Element {
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[0] = c;
        self.element_unchecked(coords)
    }

    /// Product of coordinate vectors: `(xy)^k = sum_{i,j} x^i y^j C^k_{ij}`.
    pub(crate) fn mul_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let start = (i * self.dim() + j) * self.dim();
        self.element_unchecked(self.0.spec.constants[start..start + self.dim()].to_vec())
    }

    /// First basis pair `(i, j)` in lexicographic order with `e_i e_j != e_j e_i`.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| (0..n).any(|k| self.constant(i, j, k) != self.constant(j, i, k)))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// First basis triple `(i, j, l)` in lexicographic order with a nonzero
    /// associator. Cached after the first call.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        *self.0.associativity.get_or_init(|| {
            let n = self.dim();
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let (a, b, c) = (self.basis(i), self.basis(j), self.basis(l));
                        if !associator_unchecked(&a, &b, &c).is_zero() {
                            return Some((i, j, l));
                        }
                    }
                }
            }
            None
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub(crate) fn conjugation_cache(&self) -> &OnceLock<bool> {
        &self.0.conjugation_ok
    }

    /// Basis of the nucleus: elements `x` with `(x,a,b) = (a,x,b) = (a,b,x) = 0`
    /// for all `a`, `b`.
    pub fn nucleus_basis(&self) -> Vec<Element> {
        self.solve_constraints(false)
    }

    /// Basis of the center: nucleus elements that also commute with every
    /// element.
    pub fn center_basis(&self) -> Vec<Element> {
        self.solve_constraints(true)
    }

    /// Stacks the linear conditions on `x` (each evaluated on basis pairs)
    /// into one matrix whose column `a` is the condition vector for `x = e_a`
    /// and returns its nullspace.
    fn solve_constraints(&self, commuting: bool) -> Vec<Element> {
        let n = self.dim();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut push_block = |f: &dyn Fn(&Element) -> Element| {
            let cols: Vec<Vec<Rational>> = (0..n).map(|a| f(&self.basis(a)).coords).collect();
            for k in 0..n {
                let row: Vec<Rational> = cols.iter().map(|c| c[k].clone()).collect();
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        };
        for i in 0..n {
            let ei = self.basis(i);
            if commuting {
                push_block(&|x| commutator_unchecked(x, &ei));
            }
            for j in 0..n {
                let ej = self.basis(j);
                push_block(&|x| associator_unchecked(x, &ei, &ej));
                push_block(&|x| associator_unchecked(&ei, x, &ej));
                push_block(&|x| associator_unchecked(&ei, &ej, x));
            }
        }
        let m = if rows.is_empty() {
            RationalMatrix::zeros(0, n)
        } else {
            RationalMatrix::from_rows(rows).expect("constraint rows have uniform width")
        };
        m.nullspace()
            .into_iter()
            .map(|v| self.element_unchecked(v))
            .collect()
    }
}

/// Element of an [`Algebra`] in coordinates relative to its basis.
///
/// The checked arithmetic methods return [`Error::SpecMismatch`] when the
/// operands come from different algebras. The operator impls on references
/// panic instead.
#[derive(Clone)]
pub struct Element {
    algebra: Algebra,
    coords: Vec<Rational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.algebra == other.algebra
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({}: {})", self.algebra.name(), self)
    }
}

fn same(x: &Element, y: &Element) -> Result<(), Error> {
    if x.algebra == y.algebra {
        Ok(())
    } else {
        Err(Error::SpecMismatch)
    }
}

pub(crate) fn commutator_unchecked(x: &Element, y: &Element) -> Element {
    let a = x.algebra.mul_coords(&x.coords, &y.coords);
    let b = x.algebra.mul_coords(&y.coords, &x.coords);
    x.algebra
        .element_unchecked(a.into_iter().zip(b).map(|(p, q)| p - q).collect())
}

pub(crate) fn associator_unchecked(x: &Element, y: &Element, z: &Element) -> Element {
    let alg = &x.algebra;
    let left = alg.mul_coords(&alg.mul_coords(&x.coords, &y.coords), &z.coords);
    let right = alg.mul_coords(&x.coords, &alg.mul_coords(&y.coords, &z.coords));
    alg.element_unchecked(left.into_iter().zip(right).map(|(p, q)| p - q).collect())
}

impl Element {
    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Element) -> Result<Element, Error> {
        same(self, other)?;
        Ok(self
            .algebra
            .element_unchecked(self.algebra.mul_coords(&self.coords, &other.coords)))
    }

    pub fn add(&self, other: &Element) -> Result<Element, Error> {
        same(self, other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Element) -> Result<Element, Error> {
        same(self, other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, c: &Rational) -> Element {
        self.algebra
            .element_unchecked(self.coords.iter().map(|x| x * c).collect())
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Element) -> Result<Element, Error> {
        same(self, other)?;
        Ok(commutator_unchecked(self, other))
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(&self, y: &Element, z: &Element) -> Result<Element, Error> {
        same(self, y)?;
        same(self, z)?;
        Ok(associator_unchecked(self, y, z))
    }

    fn zip_with(&self, other: &Element, f: impl Fn(&Rational, &Rational) -> Rational) -> Element {
        self.algebra.element_unchecked(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }

    /// Canonical text form using `*` between coefficient and basis name, so the
    /// result parses back as an expression.
    pub fn to_expression(&self) -> String {
        render(self, "*")
    }
}

/// Terms in basis order; unit term as a bare rational; coefficient `1` elided
/// on non-unit terms; zero renders as `0`.
fn render(x: &Element, joiner: &str) -> String {
    let mut out = String::new();
    for (i, c) in x.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if i == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push_str(joiner);
            }
            out.push_str(x.algebra.basis_name(i));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical element rendering, e.g. `1 - 2i - 3j - 4k`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, ""))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs).expect("operands from different algebras")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs).expect("operands from different algebras")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs).expect("operands from different algebras")
    }
}

impl Mul<&Element> for &Rational {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.algebra
            .element_unchecked(self.coords.iter().map(|x| -x).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::exact::{integer, rational};

    fn quaternion() -> Algebra {
        builtin("quaternion").unwrap().algebra
    }

    fn el(alg: &Algebra, coords: &[i64]) -> Element {
        alg.element(coords.iter().map(|&c| integer(c)).collect())
            .unwrap()
    }

    #[test]
    fn quaternion_spec_passes_unit_check() {
        let q = quaternion();
        for j in 0..4 {
            for k in 0..4 {
                let d = if j == k { integer(1) } else { integer(0) };
                assert_eq!(q.constant(0, j, k), &d);
                assert_eq!(q.constant(j, 0, k), &d);
            }
        }
        assert!(validate_spec(q.spec().clone()).is_ok());
    }

    #[test]
    fn one_dimensional_base_field() {
        let spec = AlgebraSpec::with_unit("Q", vec!["1".into()]);
        assert_eq!(spec.constant(0, 0, 0), &integer(1));
        let a = validate_spec(spec).unwrap();
        assert!(a.is_commutative() && a.is_associative());
        assert_eq!(a.center_basis().len(), 1);
    }

    #[test]
    fn altered_unit_constant_is_reported() {
        let mut spec = quaternion().spec().clone();
        spec.set_constant(0, 1, 1, integer(0));
        match validate_spec(spec) {
            Err(Error::UnitAxiom { i, j, k, value, .. }) => {
                assert_eq!((i, j, k), (0, 1, 1));
                assert_eq!(*value, integer(0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        let mut spec = quaternion().spec().clone();
        spec.basis_names.pop();
        assert!(matches!(validate_spec(spec), Err(Error::InvalidSpec(_))));

        let mut spec = quaternion().spec().clone();
        spec.basis_names[2] = "i".into();
        assert!(matches!(validate_spec(spec), Err(Error::InvalidSpec(_))));

        let mut spec = quaternion().spec().clone();
        spec.constants.pop();
        assert!(matches!(validate_spec(spec), Err(Error::InvalidSpec(_))));

        let spec = AlgebraSpec::zeroed("empty", vec![]);
        assert!(matches!(validate_spec(spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn hamilton_products() {
        let q = quaternion();
        let (i, j, k) = (q.basis(1), q.basis(2), q.basis(3));
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, -&q.one());
    }

    #[test]
    fn complex_i_squared() {
        let c = builtin("complex").unwrap().algebra;
        let i = c.basis(1);
        assert_eq!(&i * &i, c.embed_scalar(integer(-1)));
    }

    #[test]
    fn unit_is_neutral() {
        let q = quaternion();
        let x = el(&q, &[3, -1, 4, 1]);
        assert_eq!(&q.one() * &x, x);
        assert_eq!(&x * &q.one(), x);
    }

    #[test]
    fn module_operations() {
        let c = builtin("complex").unwrap().algebra;
        let a = el(&c, &[1, 1]);
        let b = el(&c, &[1, -1]);
        assert_eq!(&a + &b, c.embed_scalar(integer(2)));
        assert!((&a - &a).is_zero());
        assert_eq!(el(&c, &[0, 2]).scale(&rational(1, 2)), c.basis(1));
    }

    #[test]
    fn embed_scalar_examples() {
        let q = quaternion();
        assert_eq!(q.embed_scalar(integer(1)), q.one());
        assert!(q.embed_scalar(integer(0)).is_zero());
        assert_eq!(
            q.embed_scalar(rational(3, 2)).coords(),
            &[rational(3, 2), integer(0), integer(0), integer(0)]
        );
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let q = quaternion();
        let c = builtin("complex").unwrap().algebra;
        assert_eq!(q.one().mul(&c.one()), Err(Error::SpecMismatch));
        assert_eq!(q.one().add(&c.one()), Err(Error::SpecMismatch));
        assert_eq!(
            q.one().associator(&q.one(), &c.one()),
            Err(Error::SpecMismatch)
        );
    }

    #[test]
    fn commutator_examples() {
        let q = quaternion();
        let (i, j, k) = (q.basis(1), q.basis(2), q.basis(3));
        assert_eq!(i.commutator(&j).unwrap(), k.scale(&integer(2)));
        let x = el(&q, &[1, 2, 3, 4]);
        assert!(x.commutator(&x).unwrap().is_zero());
        let c = builtin("complex").unwrap().algebra;
        assert!(el(&c, &[2, 3])
            .commutator(&el(&c, &[-1, 5]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn associator_examples() {
        let q = quaternion();
        let (i, j, k) = (q.basis(1), q.basis(2), q.basis(3));
        assert!(i.associator(&j, &k).unwrap().is_zero());
        let x = el(&q, &[1, 2, 3, 4]);
        let y = el(&q, &[0, -1, 0, 5]);
        assert!(q.one().associator(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn flags_and_witnesses() {
        assert!(builtin("complex").unwrap().algebra.is_commutative());
        let q = quaternion();
        assert_eq!(q.commutativity_witness(), Some((1, 2)));
        assert!(q.is_associative());
        let o = builtin("octonion").unwrap().algebra;
        assert!(o.associativity_witness().is_some());
    }

    #[test]
    fn center_and_nucleus_dimensions() {
        let q = quaternion();
        assert_eq!(q.center_basis(), vec![q.one()]);
        assert_eq!(q.nucleus_basis().len(), 4);
        let c = builtin("complex").unwrap().algebra;
        assert_eq!(c.center_basis().len(), 2);
        let d = builtin("dual").unwrap().algebra;
        assert_eq!(d.nucleus_basis().len(), 2);
    }

    #[test]
    fn rendering() {
        let q = quaternion();
        assert_eq!(el(&q, &[1, -2, -3, -4]).to_string(), "1 - 2i - 3j - 4k");
        assert_eq!(el(&q, &[0, 0, 0, 0]).to_string(), "0");
        assert_eq!(el(&q, &[-1, 0, 0, 0]).to_string(), "-1");
        assert_eq!(el(&q, &[0, -1, 1, 0]).to_string(), "-i + j");
        assert_eq!(el(&q, &[0, 0, 2, 0]).to_string(), "2j");
        let half = q.basis(3).scale(&rational(-1, 2));
        assert_eq!(half.to_string(), "-1/2k");
        assert_eq!(half.to_expression(), "-1/2*k");
    }
}
