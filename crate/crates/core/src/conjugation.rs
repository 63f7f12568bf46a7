//! Scalar/vector split and the conjugation `d* = re d - im d`.
//!
//! The conjugation is defined on every algebra by flipping the sign of every
//! coordinate except the unit one. Whether it reverses products,
//! `(ab)* = b* a*`, depends on the constants; [`check_conjugation_algebra`]
//! decides it two ways and requires both answers to agree:
//!
//! * directly, on every basis pair `(e_k e_l)* = e_l* e_k*`;
//! * on the constants, `C^0_{kl} = C^0_{lk}` and `C^m_{kl} = -C^m_{lk}` for
//!   `k, l, m >= 1`.

use num::{One, Zero};

use crate::algebra::{Algebra, Element};
use crate::error::Error;
use crate::exact::{Rational, RationalMatrix};
use crate::mappings::LinearMap;

/// `d^0`, the coordinate on the unit.
pub fn re_part(d: &Element) -> Rational {
    d.coord(0).clone()
}

/// `d - d^0 e_0`.
pub fn im_part(d: &Element) -> Element {
    let mut coords = d.coords().to_vec();
    coords[0] = Rational::zero();
    d.algebra().element_unchecked(coords)
}

/// The unique split `d = scalar * e_0 + vector` with `vector^0 = 0`.
pub fn decompose(d: &Element) -> (Rational, Element) {
    (re_part(d), im_part(d))
}

pub fn conjugate(d: &Element) -> Element {
    let coords = d
        .coords()
        .iter()
        .enumerate()
        .map(|(i, x)| if i == 0 { x.clone() } else { -x })
        .collect();
    d.algebra().element_unchecked(coords)
}

pub fn is_in_re(d: &Element) -> bool {
    d.coords()[1..].iter().all(Zero::is_zero)
}

pub fn is_in_im(d: &Element) -> bool {
    d.coord(0).is_zero()
}

/// `d + d*`, which equals `2 re(d) e_0`.
pub fn sum_with_conjugate(d: &Element) -> Element {
    let out = d + &conjugate(d);
    debug_assert_eq!(
        out,
        d.algebra()
            .embed_scalar(re_part(d) * Rational::from_integer(2.into()))
    );
    out
}

/// `d - d*`, which equals `2 im(d)`.
pub fn diff_with_conjugate(d: &Element) -> Element {
    let out = d - &conjugate(d);
    debug_assert_eq!(out, im_part(d).scale(&Rational::from_integer(2.into())));
    out
}

/// `diag(1, -1, ..., -1)`.
pub fn conjugation_matrix(algebra: &Algebra) -> LinearMap {
    let n = algebra.dim();
    let mut m = RationalMatrix::identity(n);
    for i in 1..n {
        m.set(i, i, -Rational::one());
    }
    LinearMap::from_matrix_unchecked(algebra, m)
}

/// Basis pair where `(e_k e_l)*` and `e_l* e_k*` differ.
#[derive(Clone, Debug, PartialEq)]
pub struct AntihomWitness {
    pub k: usize,
    pub l: usize,
    /// `(e_k e_l)*`
    pub left: Element,
    /// `e_l* e_k*`
    pub right: Element,
}

/// A constant breaking the symmetric/antisymmetric pattern:
/// `C^m_{kl}` should equal `C^m_{lk}` when `m = 0` and `-C^m_{lk}` otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantsWitness {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    /// `C^m_{kl}`
    pub value: Rational,
    /// `C^m_{lk}`
    pub partner: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationReport {
    pub passed: bool,
    pub antihom_witness: Option<AntihomWitness>,
    pub constants_witness: Option<ConstantsWitness>,
    pub pairs_checked: usize,
    pub constants_checked: usize,
}

impl ConjugationReport {
    pub fn antihom_ok(&self) -> bool {
        self.antihom_witness.is_none()
    }

    pub fn constants_ok(&self) -> bool {
        self.constants_witness.is_none()
    }

    pub fn criteria_agree(&self) -> bool {
        self.antihom_ok() == self.constants_ok()
    }
}

fn antihom_scan(algebra: &Algebra) -> (Option<AntihomWitness>, usize) {
    let n = algebra.dim();
    let mut checked = 0;
    for k in 0..n {
        for l in 0..n {
            checked += 1;
            let left = conjugate(&algebra.basis_product(k, l));
            let right = &conjugate(&algebra.basis(l)) * &conjugate(&algebra.basis(k));
            if left != right {
                return (Some(AntihomWitness { k, l, left, right }), checked);
            }
        }
    }
    (None, checked)
}

fn constants_scan(algebra: &Algebra) -> (Option<ConstantsWitness>, usize) {
    let n = algebra.dim();
    let mut checked = 0;
    for k in 1..n {
        for l in 1..n {
            for m in 0..n {
                checked += 1;
                let value = algebra.constant(k, l, m);
                let partner = algebra.constant(l, k, m);
                let ok = if m == 0 {
                    value == partner
                } else {
                    *value == -partner
                };
                if !ok {
                    let witness = ConstantsWitness {
                        k,
                        l,
                        m,
                        value: value.clone(),
                        partner: partner.clone(),
                    };
                    return (Some(witness), checked);
                }
            }
        }
    }
    (None, checked)
}

/// Decides whether the conjugation reverses products.
///
/// Panics if the basis-pair check and the constants check disagree; on a
/// unital algebra they are the same condition.
pub fn check_conjugation_algebra(algebra: &Algebra) -> ConjugationReport {
    let (antihom_witness, pairs_checked) = antihom_scan(algebra);
    let (constants_witness, constants_checked) = constants_scan(algebra);
    let report = ConjugationReport {
        passed: antihom_witness.is_none() && constants_witness.is_none(),
        antihom_witness,
        constants_witness,
        pairs_checked,
        constants_checked,
    };
    assert!(
        report.criteria_agree(),
        "conjugation criteria disagree on {}: {report:?}",
        algebra.name()
    );
    let _ = algebra.conjugation_cache().set(report.passed);
    report
}

/// Cached verdict of [`check_conjugation_algebra`].
pub fn has_conjugation(algebra: &Algebra) -> bool {
    match algebra.conjugation_cache().get() {
        Some(&ok) => ok,
        None => check_conjugation_algebra(algebra).passed,
    }
}

/// `d d*`. Requires an algebra with conjugation; the result lies in `re A`
/// and equals `d* d`.
pub fn norm_like(d: &Element) -> Result<Element, Error> {
    let algebra = d.algebra();
    if !has_conjugation(algebra) {
        return Err(Error::NoConjugation(algebra.name().to_string()));
    }
    let star = conjugate(d);
    let out = d * &star;
    assert!(is_in_re(&out), "d d* = {out} is not a scalar");
    assert_eq!(out, &star * d, "d d* != d* d");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::exact::integer;

    fn alg(key: &str) -> Algebra {
        builtin(key).unwrap().algebra
    }

    fn el(a: &Algebra, coords: &[i64]) -> Element {
        a.element(coords.iter().map(|&c| integer(c)).collect())
            .unwrap()
    }

    #[test]
    fn re_and_im_examples() {
        let c = alg("complex");
        let q = alg("quaternion");
        assert_eq!(re_part(&el(&c, &[1, 2])), integer(1));
        assert_eq!(re_part(&el(&q, &[0, 1, 1, 0])), integer(0));
        assert_eq!(re_part(&q.one()), integer(1));
        assert_eq!(im_part(&el(&c, &[1, 2])), el(&c, &[0, 2]));
        assert!(im_part(&q.one()).is_zero());
        assert_eq!(im_part(&el(&q, &[3, 1, 1, 1])), el(&q, &[0, 1, 1, 1]));
    }

    #[test]
    fn decompose_examples() {
        let q = alg("quaternion");
        let d = el(&q, &[0, 2, 0, -1]);
        assert_eq!(decompose(&d), (integer(0), d.clone()));
        assert_eq!(decompose(&q.one()), (integer(1), q.zero()));
        let x = el(&q, &[5, 2, 7, -1]);
        let (s, v) = decompose(&x);
        assert_eq!(&q.embed_scalar(s) + &v, x);
    }

    #[test]
    fn conjugate_examples() {
        let c = alg("complex");
        assert_eq!(conjugate(&el(&c, &[1, 2])), el(&c, &[1, -2]));
        let q = alg("quaternion");
        assert_eq!(conjugate(&el(&q, &[1, 2, 3, 4])), el(&q, &[1, -2, -3, -4]));
        assert_eq!(conjugate(&q.one()), q.one());
    }

    #[test]
    fn conjugation_matrices() {
        let c = alg("complex");
        assert_eq!(
            conjugation_matrix(&c).matrix().entries(),
            &[integer(1), integer(0), integer(0), integer(-1)]
        );
        let q = alg("quaternion");
        let m = conjugation_matrix(&q);
        for i in 0..4 {
            for j in 0..4 {
                let want = match (i == j, i) {
                    (false, _) => 0,
                    (true, 0) => 1,
                    (true, _) => -1,
                };
                assert_eq!(m.matrix().get(i, j), &integer(want));
            }
        }
        let base = crate::algebra::validate_spec(crate::algebra::AlgebraSpec::with_unit(
            "Q",
            vec!["1".into()],
        ))
        .unwrap();
        assert_eq!(conjugation_matrix(&base).matrix().entries(), &[integer(1)]);
    }

    #[test]
    fn quaternion_and_complex_pass() {
        for key in ["quaternion", "complex"] {
            let r = check_conjugation_algebra(&alg(key));
            assert!(r.passed, "{key}");
            assert!(r.antihom_witness.is_none() && r.constants_witness.is_none());
        }
    }

    #[test]
    fn idempotent_fails_with_witnesses() {
        let e = alg("idempotent");
        let r = check_conjugation_algebra(&e);
        assert!(!r.passed);
        let w = r.antihom_witness.unwrap();
        assert_eq!((w.k, w.l), (1, 1));
        assert_eq!(w.left, -&e.basis(1));
        assert_eq!(w.right, e.basis(1));
        let c = r.constants_witness.unwrap();
        assert_eq!((c.k, c.l, c.m), (1, 1, 1));
        assert_eq!(c.value, integer(1));
    }

    #[test]
    fn sum_and_diff_examples() {
        let q = alg("quaternion");
        let d = el(&q, &[1, 1, 1, 0]);
        assert_eq!(sum_with_conjugate(&d), q.embed_scalar(integer(2)));
        assert_eq!(diff_with_conjugate(&d), el(&q, &[0, 2, 2, 0]));
        assert!(diff_with_conjugate(&q.embed_scalar(integer(7))).is_zero());
    }

    #[test]
    fn norm_like_examples() {
        let q = alg("quaternion");
        assert_eq!(
            norm_like(&el(&q, &[1, 1, 1, 1])).unwrap(),
            q.embed_scalar(integer(4))
        );
        let c = alg("complex");
        assert_eq!(
            norm_like(&el(&c, &[3, -5])).unwrap(),
            c.embed_scalar(integer(34))
        );
        let d = alg("dual");
        assert_eq!(
            norm_like(&el(&d, &[-3, 8])).unwrap(),
            d.embed_scalar(integer(9))
        );
        let e = alg("idempotent");
        assert!(matches!(
            norm_like(&e.basis(1)),
            Err(Error::NoConjugation(_))
        ));
    }

    #[test]
    fn membership_tests() {
        let q = alg("quaternion");
        assert!(is_in_re(&q.one()));
        assert!(is_in_im(&q.basis(1)));
        let x = el(&q, &[1, 1, 0, 0]);
        assert!(!is_in_re(&x) && !is_in_im(&x));
    }
}
