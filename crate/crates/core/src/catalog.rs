//! Built-in algebras used as fixtures and worked examples.
//!
//! | key             | dim | relations                                        |
//! |-----------------|-----|--------------------------------------------------|
//! | `complex`       | 2   | `i*i = -1`                                       |
//! | `split_complex` | 2   | `j*j = 1`                                        |
//! | `dual`          | 2   | `eps*eps = 0`                                    |
//! | `quaternion`    | 4   | `i*i = j*j = k*k = -1`, `ij = k`, `jk = i`, `ki = j`, anticommuting |
//! | `octonion`      | 8   | Cayley-Dickson double of `quaternion`            |
//! | `mat2`          | 4   | 2x2 matrices in basis `1, u = E11-E22, v = E12+E21, w = E12-E21` |
//! | `idempotent`    | 2   | `e1*e1 = e1` (fails the conjugation check)       |
//!
//! The octonion basis is `1, e1, e2, e3` (the quaternion `1, i, j, k`) followed
//! by `e4 .. e7`, the pairs `(0, 1), (0, i), (0, j), (0, k)`, multiplied by
//!
//! ```text
//! (a, b)(c, d) = (ac - d* b, d a + b c*)
//! ```
//!
//! which gives the signed table (row times column):
//!
//! ```text
//!       e1   e2   e3   e4   e5   e6   e7
//! e1    -1   e3  -e2   e5  -e4  -e7   e6
//! e2   -e3   -1   e1   e6   e7  -e4  -e5
//! e3    e2  -e1   -1   e7  -e6   e5  -e4
//! e4   -e5  -e6  -e7   -1   e1   e2   e3
//! e5    e4  -e7   e6  -e1   -1  -e3   e2
//! e6    e7   e4  -e5  -e2   e3   -1  -e1
//! e7   -e6   e5   e4  -e3  -e2   e1   -1
//! ```

use num::{One, Zero};

use crate::algebra::{validate_spec, Algebra, AlgebraSpec};
use crate::conjugation::check_conjugation_algebra;
use crate::error::Error;
use crate::exact::{integer, rational, Rational};

pub const KEYS: [&str; 7] = [
    "complex",
    "split_complex",
    "dual",
    "quaternion",
    "octonion",
    "mat2",
    "idempotent",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub commutative: bool,
    pub associative: bool,
    pub conjugation_ok: bool,
}

impl Flags {
    pub fn compute(algebra: &Algebra) -> Self {
        Self {
            commutative: algebra.is_commutative(),
            associative: algebra.is_associative(),
            conjugation_ok: check_conjugation_algebra(algebra).passed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub algebra: Algebra,
    pub expected: Flags,
    pub notes: &'static str,
}

impl CatalogEntry {
    pub fn self_test(&self) -> bool {
        Flags::compute(&self.algebra) == self.expected
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn flags(commutative: bool, associative: bool, conjugation_ok: bool) -> Flags {
    Flags {
        commutative,
        associative,
        conjugation_ok,
    }
}

/// Two-dimensional algebra `1, e` with `e*e = square * 1 + linear * e`.
fn two_dim(key: &str, gen: &str, square: i64, linear: i64) -> AlgebraSpec {
    let mut spec = AlgebraSpec::with_unit(key, names(&["1", gen]));
    spec.set_constant(1, 1, 0, integer(square));
    spec.set_constant(1, 1, 1, integer(linear));
    spec
}

fn quaternion_spec() -> AlgebraSpec {
    let mut spec = AlgebraSpec::with_unit("quaternion", names(&["1", "i", "j", "k"]));
    for m in 1..4 {
        spec.set_constant(m, m, 0, integer(-1));
    }
    // cyclic (1,2,3): ij = k, jk = i, ki = j
    for (a, b, c) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        spec.set_constant(a, b, c, integer(1));
        spec.set_constant(b, a, c, integer(-1));
    }
    spec
}

/// Cayley-Dickson doubling of an algebra whose conjugation is the sign flip
/// on indices `>= 1`. Basis `e_m` for `m < n` is `(e_m, 0)`, and `e_{n+m}` is
/// `(0, e_m)`.
pub fn cayley_dickson(base: &Algebra, name: &str, basis_names: Vec<String>) -> AlgebraSpec {
    let n = base.dim();
    let conj = |v: &[Rational]| -> Vec<Rational> {
        v.iter()
            .enumerate()
            .map(|(i, x)| if i == 0 { x.clone() } else { -x })
            .collect()
    };
    let split = |idx: usize| -> (Vec<Rational>, Vec<Rational>) {
        let mut a = vec![Rational::zero(); n];
        let mut b = vec![Rational::zero(); n];
        if idx < n {
            a[idx] = Rational::one();
        } else {
            b[idx - n] = Rational::one();
        }
        (a, b)
    };
    let sub = |x: Vec<Rational>, y: Vec<Rational>| -> Vec<Rational> {
        x.into_iter().zip(y).map(|(p, q)| p - q).collect()
    };
    let add = |x: Vec<Rational>, y: Vec<Rational>| -> Vec<Rational> {
        x.into_iter().zip(y).map(|(p, q)| p + q).collect()
    };
    AlgebraSpec::from_products(name, basis_names, |i, j| {
        let ((a, b), (c, d)) = (split(i), split(j));
        let first = sub(base.mul_coords(&a, &c), base.mul_coords(&conj(&d), &b));
        let second = add(base.mul_coords(&d, &a), base.mul_coords(&b, &conj(&c)));
        first.into_iter().chain(second).collect()
    })
}

type Mat2 = [[Rational; 2]; 2];

fn mat2_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let cell = |r: usize, c: usize| &x[r][0] * &y[0][c] + &x[r][1] * &y[1][c];
    [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
}

/// `x0*1 + x1*u + x2*v + x3*w` as a 2x2 matrix.
pub fn mat2_from_coords(x: &[Rational]) -> Mat2 {
    [
        [&x[0] + &x[1], &x[2] + &x[3]],
        [&x[2] - &x[3], &x[0] - &x[1]],
    ]
}

fn mat2_to_coords(m: &Mat2) -> Vec<Rational> {
    let half = rational(1, 2);
    vec![
        (&m[0][0] + &m[1][1]) * &half,
        (&m[0][0] - &m[1][1]) * &half,
        (&m[0][1] + &m[1][0]) * &half,
        (&m[0][1] - &m[1][0]) * &half,
    ]
}

fn mat2_spec() -> AlgebraSpec {
    let basis = |i: usize| {
        let mut v = vec![Rational::zero(); 4];
        v[i] = Rational::one();
        mat2_from_coords(&v)
    };
    AlgebraSpec::from_products("mat2", names(&["1", "u", "v", "w"]), |i, j| {
        mat2_to_coords(&mat2_mul(&basis(i), &basis(j)))
    })
}

fn octonion_spec() -> AlgebraSpec {
    let quaternion = validate_spec(quaternion_spec()).expect("quaternion table is unital");
    let basis = (0..8)
        .map(|m| {
            if m == 0 {
                "1".to_string()
            } else {
                format!("e{m}")
            }
        })
        .collect();
    cayley_dickson(&quaternion, "octonion", basis)
}

/// Looks up a built-in algebra by key. See [`KEYS`].
pub fn builtin(key: &str) -> Result<CatalogEntry, Error> {
    let (key, spec, expected, notes) = match key {
        "complex" => (
            "complex",
            two_dim("complex", "i", -1, 0),
            flags(true, true, true),
            "i*i = -1",
        ),
        "split_complex" => (
            "split_complex",
            two_dim("split_complex", "j", 1, 0),
            flags(true, true, true),
            "j*j = 1",
        ),
        "dual" => (
            "dual",
            two_dim("dual", "eps", 0, 0),
            flags(true, true, true),
            "eps*eps = 0",
        ),
        "quaternion" => (
            "quaternion",
            quaternion_spec(),
            flags(false, true, true),
            "Hamilton table: i*i = j*j = k*k = -1, ij = k, jk = i, ki = j",
        ),
        "octonion" => (
            "octonion",
            octonion_spec(),
            flags(false, false, true),
            "Cayley-Dickson double of the quaternions, (a,b)(c,d) = (ac - d*b, da + bc*)",
        ),
        "mat2" => (
            "mat2",
            mat2_spec(),
            flags(false, true, true),
            "2x2 rational matrices in basis 1, E11-E22, E12+E21, E12-E21",
        ),
        "idempotent" => (
            "idempotent",
            two_dim("idempotent", "e1", 0, 1),
            flags(true, true, false),
            "e1*e1 = e1; negative fixture for the conjugation check",
        ),
        other => return Err(Error::UnknownCatalogKey(other.to_string())),
    };
    Ok(CatalogEntry {
        key,
        algebra: validate_spec(spec)?,
        expected,
        notes,
    })
}

pub fn all() -> Vec<CatalogEntry> {
    KEYS.iter()
        .map(|k| builtin(k).expect("catalog keys are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_matches_its_flags() {
        for entry in all() {
            assert!(
                entry.self_test(),
                "{}: {:?}",
                entry.key,
                Flags::compute(&entry.algebra)
            );
        }
    }

    #[test]
    fn named_flag_examples() {
        let q = builtin("quaternion").unwrap();
        assert_eq!(q.expected, flags(false, true, true));
        let o = builtin("octonion").unwrap();
        assert_eq!(o.expected, flags(false, false, true));
        let e = builtin("idempotent").unwrap();
        assert_eq!(e.expected, flags(true, true, false));
    }

    #[test]
    fn unknown_key() {
        assert!(matches!(
            builtin("sedenion"),
            Err(Error::UnknownCatalogKey(_))
        ));
    }

    #[test]
    fn octonion_table_matches_docs() {
        let o = builtin("octonion").unwrap().algebra;
        let rows = [
            "-1 e3 -e2 e5 -e4 -e7 e6",
            "-e3 -1 e1 e6 e7 -e4 -e5",
            "e2 -e1 -1 e7 -e6 e5 -e4",
            "-e5 -e6 -e7 -1 e1 e2 e3",
            "e4 -e7 e6 -e1 -1 -e3 e2",
            "e7 e4 -e5 -e2 e3 -1 -e1",
            "-e6 e5 e4 -e3 -e2 e1 -1",
        ];
        for (i, row) in rows.iter().enumerate() {
            let got: Vec<String> = (1..8)
                .map(|j| o.basis_product(i + 1, j).to_string())
                .collect();
            assert_eq!(got.join(" "), *row, "row e{}", i + 1);
        }
    }

    #[test]
    fn mat2_basis_relations() {
        let m = builtin("mat2").unwrap().algebra;
        let (u, v, w) = (m.basis(1), m.basis(2), m.basis(3));
        assert_eq!(&u * &u, m.one());
        assert_eq!(&v * &v, m.one());
        assert_eq!(&w * &w, -&m.one());
        assert_eq!(&u * &v, w);
        assert_eq!(&v * &u, -&w);
    }
}
