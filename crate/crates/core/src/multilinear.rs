//! Multilinear maps `A x ... x A -> A` as coordinate tensors.
//!
//! A `p`-linear map is fixed by its values on basis tuples. [`MultiMap`]
//! stores `F^k_{i1...ip}` densely, first argument index most significant and
//! the output index last.

use std::fmt;

use num::{One, Zero};

use crate::algebra::{Algebra, Element};
use crate::error::Error;
use crate::exact::Rational;
use crate::random::{random_element, random_rational, seeded};

/// Anything that can be evaluated as a `p`-linear map on an algebra.
pub trait Multilinear {
    fn algebra(&self) -> &Algebra;
    fn arity(&self) -> usize;
    fn eval(&self, args: &[Element]) -> Result<Element, Error>;
}

#[derive(Clone, PartialEq)]
pub struct MultiMap {
    algebra: Algebra,
    arity: usize,
    tensor: Vec<Rational>,
}

impl fmt::Debug for MultiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiMap")
            .field("algebra", &self.algebra.name())
            .field("arity", &self.arity)
            .finish_non_exhaustive()
    }
}

fn check_args(algebra: &Algebra, arity: usize, args: &[Element]) -> Result<(), Error> {
    if args.len() != arity {
        return Err(Error::Arity {
            expected: arity,
            found: args.len(),
        });
    }
    if args.iter().any(|a| a.algebra() != algebra) {
        return Err(Error::SpecMismatch);
    }
    Ok(())
}

/// Mixed-radix digits of `index`, most significant first.
fn digits(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut().rev() {
        *d = index % base;
        index /= base;
    }
    out
}

impl MultiMap {
    pub fn new(algebra: &Algebra, arity: usize, tensor: Vec<Rational>) -> Result<Self, Error> {
        if arity == 0 {
            return Err(Error::Arity {
                expected: 1,
                found: 0,
            });
        }
        let n = algebra.dim();
        let expected = n.pow(arity as u32 + 1);
        if tensor.len() != expected {
            return Err(Error::Shape(format!(
                "{} tensor entries for a {arity}-linear map in dimension {n}, expected {expected}",
                tensor.len()
            )));
        }
        Ok(Self {
            algebra: algebra.clone(),
            arity,
            tensor,
        })
    }

    /// Tabulates the map whose value on `(e_{i1}, ..., e_{ip})` is `f(&[i1, ..., ip])`.
    pub fn from_basis_values(
        algebra: &Algebra,
        arity: usize,
        f: impl Fn(&[usize]) -> Element,
    ) -> Self {
        let n = algebra.dim();
        let tuples = n.pow(arity as u32);
        let mut tensor = Vec::with_capacity(tuples * n);
        for t in 0..tuples {
            tensor.extend(f(&digits(t, n, arity)).into_coords());
        }
        Self {
            algebra: algebra.clone(),
            arity,
            tensor,
        }
    }

    pub fn identity(algebra: &Algebra) -> Self {
        Self::from_basis_values(algebra, 1, |idx| algebra.basis(idx[0]))
    }

    pub fn zero(algebra: &Algebra, arity: usize) -> Self {
        Self::from_basis_values(algebra, arity, |_| algebra.zero())
    }

    pub fn tensor(&self) -> &[Rational] {
        &self.tensor
    }

    /// `F^k_{indices}`.
    pub fn entry(&self, indices: &[usize], k: usize) -> &Rational {
        assert_eq!(indices.len(), self.arity);
        let n = self.algebra.dim();
        let flat = indices.iter().fold(0, |acc, &i| acc * n + i);
        &self.tensor[flat * n + k]
    }

    /// `h(x_1, ..., x_p) = self(x_{perm[0]}, ..., x_{perm[p-1]})`.
    pub fn permute_args(&self, perm: &[usize]) -> Result<Self, Error> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.arity).collect::<Vec<_>>() {
            return Err(Error::Shape(format!(
                "{perm:?} is not a permutation of {} arguments",
                self.arity
            )));
        }
        let alg = &self.algebra;
        Ok(Self::from_basis_values(alg, self.arity, |idx| {
            let inner: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            let n = alg.dim();
            alg.element_unchecked((0..n).map(|k| self.entry(&inner, k).clone()).collect())
        }))
    }

    fn same_shape(&self, other: &MultiMap) -> Result<(), Error> {
        if self.algebra != other.algebra {
            return Err(Error::SpecMismatch);
        }
        if self.arity != other.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    /// Pointwise difference `F - G`.
    pub fn map_sub(&self, other: &MultiMap) -> Result<Self, Error> {
        self.same_shape(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            arity: self.arity,
            tensor: self
                .tensor
                .iter()
                .zip(&other.tensor)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn map_add(&self, other: &MultiMap) -> Result<Self, Error> {
        self.same_shape(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            arity: self.arity,
            tensor: self
                .tensor
                .iter()
                .zip(&other.tensor)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.iter().all(Zero::is_zero)
    }
}

impl Multilinear for MultiMap {
    fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    fn arity(&self) -> usize {
        self.arity
    }

    /// Contracts one argument at a time, first argument first.
    fn eval(&self, args: &[Element]) -> Result<Element, Error> {
        check_args(&self.algebra, self.arity, args)?;
        let n = self.algebra.dim();
        let mut current = self.tensor.clone();
        for arg in args {
            let block = current.len() / n;
            let mut next = vec![Rational::zero(); block];
            for (i, a) in arg.coords().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, t) in next.iter_mut().zip(&current[i * block..(i + 1) * block]) {
                    if !t.is_zero() {
                        *o += a * t;
                    }
                }
            }
            current = next;
        }
        Ok(self.algebra.element_unchecked(current))
    }
}

/// The product as a bilinear map; its tensor is the structure constants.
pub fn product_map(algebra: &Algebra) -> MultiMap {
    MultiMap {
        algebra: algebra.clone(),
        arity: 2,
        tensor: algebra.spec().constants.clone(),
    }
}

/// `[x, y] = xy - yx` built as `product - product∘swap`.
pub fn commutator_map(algebra: &Algebra) -> MultiMap {
    let p = product_map(algebra);
    let swapped = p.permute_args(&[1, 0]).expect("valid permutation");
    p.map_sub(&swapped).expect("same shape")
}

/// `(x, y, z) = (xy)z - x(yz)` built from two substitutions of the product
/// into itself.
pub fn associator_map(algebra: &Algebra) -> MultiMap {
    let p = product_map(algebra);
    let left = substitute(&p, &p, 1).expect("slot in range");
    let right = substitute(&p, &p, 2).expect("slot in range");
    left.map_sub(&right).expect("same shape")
}

/// Plugs `g` into argument `slot` (1-based) of `f`:
///
/// ```text
/// h(x_1, ..., x_{i-1}, y_1, ..., y_m, x_{i+1}, ..., x_n)
///     = f(x_1, ..., x_{i-1}, g(y_1, ..., y_m), x_{i+1}, ..., x_n)
/// ```
///
/// The result has arity `n + m - 1`.
pub fn substitute(f: &MultiMap, g: &MultiMap, slot: usize) -> Result<MultiMap, Error> {
    if f.algebra != g.algebra {
        return Err(Error::SpecMismatch);
    }
    if slot == 0 || slot > f.arity {
        return Err(Error::SlotOutOfRange {
            slot,
            arity: f.arity,
        });
    }
    let n = f.algebra.dim();
    let m = g.arity;
    let before = n.pow(slot as u32 - 1);
    let middle = n.pow(m as u32);
    let after = n.pow((f.arity - slot) as u32);
    let arity = f.arity + m - 1;
    let mut tensor = vec![Rational::zero(); n.pow(arity as u32 + 1)];
    for l in 0..before {
        for y in 0..middle {
            for r in 0..after {
                let h_base = ((l * middle + y) * after + r) * n;
                for s in 0..n {
                    let gv = &g.tensor[y * n + s];
                    if gv.is_zero() {
                        continue;
                    }
                    let f_base = ((l * n + s) * after + r) * n;
                    for k in 0..n {
                        let fv = &f.tensor[f_base + k];
                        if !fv.is_zero() {
                            tensor[h_base + k] += fv * gv;
                        }
                    }
                }
            }
        }
    }
    Ok(MultiMap {
        algebra: f.algebra.clone(),
        arity,
        tensor,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Additivity,
    Homogeneity,
}

/// Failure of linearity in argument `slot` (1-based): with `args` fixed,
/// `f(.., x + extra, ..) != f(.., x, ..) + f(.., extra, ..)` for additivity,
/// or `f(.., c x, ..) != c f(.., x, ..)` for homogeneity.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub slot: usize,
    pub kind: ViolationKind,
    pub args: Vec<Element>,
    pub extra: Element,
    pub scalar: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultilinearityReport {
    pub trials: usize,
    /// At most one violation per slot, the first found.
    pub violations: Vec<Violation>,
}

impl MultilinearityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Randomized exact test of additivity and homogeneity in every argument.
pub fn check_multilinearity<M: Multilinear + ?Sized>(
    f: &M,
    trials: usize,
    seed: u64,
) -> MultilinearityReport {
    let mut rng = seeded(seed);
    let alg = f.algebra().clone();
    let p = f.arity();
    let mut violations: Vec<Violation> = Vec::new();
    let eval = |args: &[Element]| f.eval(args).expect("well-formed arguments");
    for _ in 0..trials.max(1) {
        for slot in 0..p {
            if violations.iter().any(|v| v.slot == slot + 1) {
                continue;
            }
            let args: Vec<Element> = (0..p).map(|_| random_element(&mut rng, &alg)).collect();
            let extra = random_element(&mut rng, &alg);
            let mut c = random_rational(&mut rng);
            if c.is_zero() || c.is_one() {
                c += Rational::from_integer(2.into());
            }
            let with = |v: Element| {
                let mut a = args.clone();
                a[slot] = v;
                a
            };
            let base = eval(&args);
            let sum = eval(&with(&args[slot] + &extra));
            if sum != &base + &eval(&with(extra.clone())) {
                violations.push(Violation {
                    slot: slot + 1,
                    kind: ViolationKind::Additivity,
                    args,
                    extra,
                    scalar: c,
                });
                continue;
            }
            let scaled = eval(&with(args[slot].scale(&c)));
            if scaled != base.scale(&c) {
                violations.push(Violation {
                    slot: slot + 1,
                    kind: ViolationKind::Homogeneity,
                    args,
                    extra,
                    scalar: c,
                });
            }
        }
    }
    MultilinearityReport {
        trials: trials.max(1),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{all, builtin};
    use crate::exact::integer;

    fn alg(key: &str) -> Algebra {
        builtin(key).unwrap().algebra
    }

    #[test]
    fn product_map_examples() {
        let q = alg("quaternion");
        let p = product_map(&q);
        let (i, j, k) = (q.basis(1), q.basis(2), q.basis(3));
        assert_eq!(p.eval(&[i.clone(), j.clone()]).unwrap(), k);
        assert_eq!(p.entry(&[1, 2], 3), &integer(1));
        let c = alg("complex");
        assert_eq!(product_map(&c).entry(&[1, 1], 0), &integer(-1));
        for entry in all() {
            let a = entry.algebra;
            let p = product_map(&a);
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let d = if j == k { integer(1) } else { integer(0) };
                    assert_eq!(p.entry(&[0, j], k), &d);
                }
            }
        }
    }

    #[test]
    fn zero_argument_gives_zero() {
        let q = alg("quaternion");
        let f = substitute(&product_map(&q), &product_map(&q), 2).unwrap();
        let args = [q.basis(1), q.zero(), q.basis(3)];
        assert!(f.eval(&args).unwrap().is_zero());
    }

    #[test]
    fn eval_errors() {
        let q = alg("quaternion");
        let p = product_map(&q);
        assert_eq!(
            p.eval(&[q.one()]),
            Err(Error::Arity {
                expected: 2,
                found: 1
            })
        );
        let c = alg("complex");
        assert_eq!(p.eval(&[q.one(), c.one()]), Err(Error::SpecMismatch));
    }

    #[test]
    fn commutator_map_eval() {
        let q = alg("quaternion");
        let got = commutator_map(&q).eval(&[q.basis(1), q.basis(2)]).unwrap();
        assert_eq!(got, q.basis(3).scale(&integer(2)));
    }

    #[test]
    fn nested_product_substitution() {
        let q = alg("quaternion");
        let h = substitute(&product_map(&q), &product_map(&q), 1).unwrap();
        assert_eq!(h.arity(), 3);
        let got = h.eval(&[q.basis(1), q.basis(2), q.basis(2)]).unwrap();
        assert_eq!(got, -&q.basis(1));
    }

    #[test]
    fn identity_substitution_is_noop() {
        let q = alg("quaternion");
        let p = product_map(&q);
        let id = MultiMap::identity(&q);
        assert_eq!(substitute(&p, &id, 1).unwrap(), p);
        assert_eq!(substitute(&p, &id, 2).unwrap(), p);
        assert_eq!(substitute(&id, &p, 1).unwrap(), p);
    }

    #[test]
    fn substitution_errors() {
        let q = alg("quaternion");
        let p = product_map(&q);
        assert_eq!(
            substitute(&p, &p, 0),
            Err(Error::SlotOutOfRange { slot: 0, arity: 2 })
        );
        assert_eq!(
            substitute(&p, &p, 3),
            Err(Error::SlotOutOfRange { slot: 3, arity: 2 })
        );
        let c = alg("complex");
        assert_eq!(
            substitute(&p, &product_map(&c), 1),
            Err(Error::SpecMismatch)
        );
    }

    #[test]
    fn octonion_associator_map_matches_pointwise() {
        let o = alg("octonion");
        let args = [o.basis(1), o.basis(2), o.basis(4)];
        let via_map = associator_map(&o).eval(&args).unwrap();
        let direct = args[0].associator(&args[1], &args[2]).unwrap();
        assert_eq!(via_map, direct);
        assert!(!direct.is_zero());
    }

    #[test]
    fn map_sub_examples() {
        let q = alg("quaternion");
        let p = product_map(&q);
        assert!(p.map_sub(&p).unwrap().is_zero());
        let zero = MultiMap::zero(&q, 2);
        let x = [q.basis(1), q.basis(2)];
        assert_eq!(
            zero.map_sub(&p).unwrap().eval(&x).unwrap(),
            -&p.eval(&x).unwrap()
        );
        assert!(matches!(
            p.map_sub(&MultiMap::identity(&q)),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn multilinearity_of_tensor_maps() {
        let q = alg("quaternion");
        let h = substitute(&product_map(&q), &product_map(&q), 2).unwrap();
        assert!(check_multilinearity(&h, 100, 7).is_clean());
        for entry in all() {
            assert!(check_multilinearity(&product_map(&entry.algebra), 10, 1).is_clean());
        }
    }

    /// Bilinear product with `x_2` replaced by `x_2 * x_2` at eval time.
    struct Corrupted(MultiMap);

    impl Multilinear for Corrupted {
        fn algebra(&self) -> &Algebra {
            self.0.algebra()
        }
        fn arity(&self) -> usize {
            2
        }
        fn eval(&self, args: &[Element]) -> Result<Element, Error> {
            let squared = &args[1] * &args[1];
            self.0.eval(&[args[0].clone(), squared])
        }
    }

    #[test]
    fn corruption_is_detected_at_its_slot() {
        let q = alg("quaternion");
        let report = check_multilinearity(&Corrupted(product_map(&q)), 20, 3);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].slot, 2);
    }
}
