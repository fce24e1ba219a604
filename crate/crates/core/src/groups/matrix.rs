//! Matrices over `Z/qZ` with determinant one, and pairs of them.

use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Group elements usable as Cayley graph vertices.
pub trait GroupElement: Clone + Eq + Hash + fmt::Debug + Send + Sync {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }
    /// Order of the ambient finite group when a closed formula is known.
    fn ambient_order(&self) -> Option<u64>;
    /// ASCII label: matrix entries, row-major, space separated.
    fn label(&self) -> String;
}

/// An `m × m` matrix over `Z/qZ`, always stored reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMatrix {
    dim: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.entries.chunks(self.dim).enumerate() {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "] mod {}", self.modulus)
    }
}

impl ModMatrix {
    /// Builds a matrix from row-major signed entries, reducing them mod `q`.
    /// Does not require determinant one.
    pub fn new(dim: usize, modulus: u64, entries: &[i64]) -> Result<Self> {
        if dim < 1 {
            return Err(Error::param("matrix dimension must be positive"));
        }
        if modulus < 2 {
            return Err(Error::param(format!("modulus must be at least 2, got {modulus}")));
        }
        if entries.len() != dim * dim {
            return Err(Error::param(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let q = modulus as i128;
        let entries = entries
            .iter()
            .map(|&e| (e as i128).rem_euclid(q) as u64)
            .collect();
        Ok(ModMatrix {
            dim,
            modulus,
            entries,
        })
    }

    /// Like [`ModMatrix::new`] but rejects matrices outside SL.
    pub fn special(dim: usize, modulus: u64, entries: &[i64]) -> Result<Self> {
        let a = Self::new(dim, modulus, entries)?;
        a.check_special()?;
        Ok(a)
    }

    pub fn identity(dim: usize, modulus: u64) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % modulus;
        }
        ModMatrix {
            dim,
            modulus,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.dim + col]
    }

    fn check_compatible(&self, other: &ModMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch(self.dim, other.dim));
        }
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    fn check_special(&self) -> Result<()> {
        let det = self.det();
        if det != 1 % self.modulus {
            return Err(Error::NotInSl {
                det,
                modulus: self.modulus,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &ModMatrix) -> Result<ModMatrix> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &ModMatrix) -> ModMatrix {
        let d = self.dim;
        let q = self.modulus as u128;
        let mut entries = vec![0u64; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc: u128 = 0;
                for k in 0..d {
                    acc += self.entries[i * d + k] as u128 * other.entries[k * d + j] as u128;
                }
                entries[i * d + j] = (acc % q) as u64;
            }
        }
        ModMatrix {
            dim: d,
            modulus: self.modulus,
            entries,
        }
    }

    /// Determinant mod `q` by cofactor expansion.
    pub fn det(&self) -> u64 {
        det_mod(&self.entries, self.dim, self.modulus)
    }

    /// Inverse of an SL element: its adjugate.
    pub fn inv(&self) -> Result<ModMatrix> {
        self.check_special()?;
        Ok(self.adjugate())
    }

    fn adjugate(&self) -> ModMatrix {
        let d = self.dim;
        let q = self.modulus;
        if d == 1 {
            return ModMatrix::identity(1, q);
        }
        let mut entries = vec![0u64; d * d];
        for i in 0..d {
            for j in 0..d {
                let minor = minor(&self.entries, d, i, j);
                let c = det_mod(&minor, d - 1, q);
                // adj[j][i] = (-1)^{i+j} det(minor_{ij})
                entries[j * d + i] = if (i + j) % 2 == 0 { c } else { (q - c) % q };
            }
        }
        ModMatrix {
            dim: d,
            modulus: q,
            entries,
        }
    }

    /// Entrywise reduction to a modulus dividing the current one.
    pub fn reduce(&self, new_modulus: u64) -> Result<ModMatrix> {
        if new_modulus < 2 || !self.modulus.is_multiple_of(new_modulus) {
            return Err(Error::NotADivisor {
                new: new_modulus,
                old: self.modulus,
            });
        }
        Ok(ModMatrix {
            dim: self.dim,
            modulus: new_modulus,
            entries: self.entries.iter().map(|e| e % new_modulus).collect(),
        })
    }

    pub fn pow(&self, k: u32) -> ModMatrix {
        let mut acc = ModMatrix::identity(self.dim, self.modulus);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }
}

fn minor(entries: &[u64], d: usize, row: usize, col: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity((d - 1) * (d - 1));
    for i in (0..d).filter(|&i| i != row) {
        for j in (0..d).filter(|&j| j != col) {
            out.push(entries[i * d + j]);
        }
    }
    out
}

fn det_mod(entries: &[u64], d: usize, q: u64) -> u64 {
    let q128 = q as u128;
    match d {
        0 => 1 % q,
        1 => entries[0] % q,
        2 => {
            let ad = entries[0] as u128 * entries[3] as u128 % q128;
            let bc = entries[1] as u128 * entries[2] as u128 % q128;
            ((ad + q128 - bc) % q128) as u64
        }
        _ => {
            let mut acc: u128 = 0;
            for j in 0..d {
                if entries[j] == 0 {
                    continue;
                }
                let c = det_mod(&minor(entries, d, 0, j), d - 1, q) as u128;
                let term = entries[j] as u128 * c % q128;
                acc = if j % 2 == 0 {
                    (acc + term) % q128
                } else {
                    (acc + q128 - term) % q128
                };
            }
            acc as u64
        }
    }
}

/// `|SL(2, Z/qZ)| = q³ ∏_{p | q} (1 − 1/p²)`.
pub fn sl2_order(q: u64) -> u64 {
    let mut order: u128 = (q as u128).pow(3);
    let mut rest = q;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            order = order / (p as u128 * p as u128) * (p as u128 * p as u128 - 1);
            while rest.is_multiple_of(p) {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        let r = rest as u128;
        order = order / (r * r) * (r * r - 1);
    }
    order as u64
}

impl GroupElement for ModMatrix {
    fn compose(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }

    fn inverse(&self) -> Self {
        self.adjugate()
    }

    fn identity_like(&self) -> Self {
        ModMatrix::identity(self.dim, self.modulus)
    }

    fn ambient_order(&self) -> Option<u64> {
        (self.dim == 2).then(|| sl2_order(self.modulus))
    }

    fn label(&self) -> String {
        self.entries
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// An element of `SL(m, Z/qZ) × SL(m, Z/qZ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductElement {
    pub left: ModMatrix,
    pub right: ModMatrix,
}

impl ProductElement {
    pub fn new(left: ModMatrix, right: ModMatrix) -> Result<Self> {
        left.check_compatible(&right)?;
        Ok(ProductElement { left, right })
    }

    pub fn mul(&self, other: &ProductElement) -> Result<ProductElement> {
        Ok(ProductElement {
            left: self.left.mul(&other.left)?,
            right: self.right.mul(&other.right)?,
        })
    }

    pub fn inv(&self) -> Result<ProductElement> {
        Ok(ProductElement {
            left: self.left.inv()?,
            right: self.right.inv()?,
        })
    }
}

impl GroupElement for ProductElement {
    fn compose(&self, other: &Self) -> Self {
        ProductElement {
            left: self.left.compose(&other.left),
            right: self.right.compose(&other.right),
        }
    }

    fn inverse(&self) -> Self {
        ProductElement {
            left: self.left.inverse(),
            right: self.right.inverse(),
        }
    }

    fn identity_like(&self) -> Self {
        ProductElement {
            left: self.left.identity_like(),
            right: self.right.identity_like(),
        }
    }

    fn ambient_order(&self) -> Option<u64> {
        let (a, b) = (self.left.ambient_order()?, self.right.ambient_order()?);
        a.checked_mul(b)
    }

    fn label(&self) -> String {
        format!("{} | {}", self.left.label(), self.right.label())
    }
}
