//! Arithmetic over `Z2^m` for `m <= 4`.
//!
//! Group elements are integers below `2^m`; the integer `b_{m-1}…b1b0` stands
//! for the vector `(b0,…,b_{m-1})`, so the basis element `2^t` is the `t`-th
//! unit vector and XOR is the group law. The inner product is the parity of
//! the bitwise AND, the only bilinear form consistent with the Fano-plane
//! identities used throughout the crate.

use crate::{Error, Result};

/// A single bit, 0 or 1.
pub type Bit = u8;

/// An element of `Z2^m`, `m` being 3 or 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2Elem {
    value: u8,
    dim: u8,
}

impl Z2Elem {
    pub fn new(value: u8, dim: u8) -> Result<Self> {
        if !(3..=4).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if value as u16 >= 1u16 << dim {
            return Err(Error::Precondition(format!(
                "value {value} out of range for Z2^{dim}"
            )));
        }
        Ok(Self { value, dim })
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Group law: bitwise XOR.
    pub fn xor(&self, other: Z2Elem) -> Result<Z2Elem> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Z2Elem {
            value: self.value ^ other.value,
            dim: self.dim,
        })
    }

    /// All elements of `Z2^dim` in ascending order.
    pub fn all(dim: u8) -> Result<Vec<Z2Elem>> {
        if !(3..=4).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok((0..1u8 << dim).map(|v| Z2Elem { value: v, dim }).collect())
    }
}

/// Parity of the bitwise AND: the standard inner product on raw values.
#[inline(always)]
pub(crate) const fn inner_raw(x: u8, y: u8) -> Bit {
    ((x & y).count_ones() & 1) as Bit
}

/// Inner product `<x,y>`; symmetric and XOR-bilinear.
pub fn inner(x: Z2Elem, y: Z2Elem) -> Result<Bit> {
    if x.dim != y.dim {
        return Err(Error::DimensionMismatch(x.dim, y.dim));
    }
    Ok(inner_raw(x.value, y.value))
}

/// The orthogonal set `{y : <x,y> = 0}`, ascending. For non-zero `x` this is
/// a hyperplane of `2^(m-1)` elements containing 0; for `x = 0` it is all of
/// `Z2^m`.
pub fn orth(x: Z2Elem) -> Vec<Z2Elem> {
    (0..1u8 << x.dim)
        .filter(|&y| inner_raw(x.value, y) == 0)
        .map(|y| Z2Elem {
            value: y,
            dim: x.dim,
        })
        .collect()
}

/// A linear map `Z2^m -> Z2^m` given by the images of the basis elements
/// `2^t`. Regular maps have linearly independent images.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Map {
    dim: u8,
    images: [u8; 4],
}

impl std::fmt::Debug for GF2Map {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF2Map{:?}", &self.images[..self.dim as usize])
    }
}

impl GF2Map {
    pub fn new(dim: u8, images: &[u8]) -> Result<Self> {
        if !(3..=4).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if images.len() != dim as usize {
            return Err(Error::Precondition(format!(
                "expected {dim} basis images, got {}",
                images.len()
            )));
        }
        let mut arr = [0u8; 4];
        for (t, &im) in images.iter().enumerate() {
            if im as u16 >= 1u16 << dim {
                return Err(Error::Precondition(format!(
                    "image {im} out of range for Z2^{dim}"
                )));
            }
            arr[t] = im;
        }
        Ok(Self { dim, images: arr })
    }

    pub fn identity(dim: u8) -> Result<Self> {
        let images: Vec<u8> = (0..dim).map(|t| 1 << t).collect();
        Self::new(dim, &images)
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    /// Basis images, one per unit vector `2^t`.
    pub fn images(&self) -> &[u8] {
        &self.images[..self.dim as usize]
    }

    /// Applies the map by XOR-linearity.
    #[inline]
    pub fn apply(&self, x: u8) -> u8 {
        debug_assert!((x as u16) < 1u16 << self.dim);
        let mut out = 0u8;
        for t in 0..self.dim as usize {
            if x >> t & 1 == 1 {
                out ^= self.images[t];
            }
        }
        out
    }

    pub fn apply_elem(&self, x: Z2Elem) -> Result<Z2Elem> {
        if x.dim != self.dim {
            return Err(Error::DimensionMismatch(x.dim, self.dim));
        }
        Z2Elem::new(self.apply(x.value), self.dim)
    }

    /// True iff the basis images are linearly independent, i.e. the map is a
    /// bijection.
    pub fn is_regular(&self) -> bool {
        // Incremental span: every image must fall outside the span so far.
        let mut span = 1u16; // bit v set <=> v is in the span; start with {0}
        for t in 0..self.dim as usize {
            let im = self.images[t];
            if span >> im & 1 == 1 {
                return false;
            }
            let mut next = span;
            for v in 0..1u8 << self.dim {
                if span >> v & 1 == 1 {
                    next |= 1u16 << (v ^ im);
                }
            }
            span = next;
        }
        true
    }

    /// Inverse by Gaussian elimination over the basis images; `None` when the
    /// map is singular.
    pub fn inverse(&self) -> Option<GF2Map> {
        let m = self.dim as usize;
        let mut mat: [u8; 4] = self.images; // column t of the matrix
        let mut inv: [u8; 4] = [1, 2, 4, 8]; // identity columns
        // Column operations over the transposenless representation: we reduce
        // `mat` to the identity while mirroring every operation on `inv`.
        for row in 0..m {
            let pivot = (row..m).find(|&c| mat[c] >> row & 1 == 1)?;
            mat.swap(row, pivot);
            inv.swap(row, pivot);
            for c in 0..m {
                if c != row && mat[c] >> row & 1 == 1 {
                    mat[c] ^= mat[row];
                    inv[c] ^= inv[row];
                }
            }
        }
        for slot in inv.iter_mut().skip(m) {
            *slot = 0;
        }
        Some(GF2Map {
            dim: self.dim,
            images: inv,
        })
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GF2Map) -> Result<GF2Map> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut images = [0u8; 4];
        for t in 0..self.dim as usize {
            images[t] = self.apply(other.images[t]);
        }
        Ok(GF2Map {
            dim: self.dim,
            images,
        })
    }

    /// The transpose map: `<M x, y> = <x, M^T y>` for all `x, y`.
    pub fn transpose(&self) -> GF2Map {
        let m = self.dim as usize;
        let mut images = [0u8; 4];
        for t in 0..m {
            let mut v = 0u8;
            for s in 0..m {
                if self.images[s] >> t & 1 == 1 {
                    v |= 1 << s;
                }
            }
            images[t] = v;
        }
        GF2Map {
            dim: self.dim,
            images,
        }
    }
}

/// Enumerates every regular (invertible) map on `Z2^m` in lexicographic order
/// of the image tuple. The count is `(2^m - 1)(2^m - 2)(2^m - 4)…`.
pub fn enumerate_regular(dim: u8) -> Result<Vec<GF2Map>> {
    if !(3..=4).contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    let size = 1u16 << dim;
    let mut out = Vec::new();
    let mut images = [0u8; 4];
    // span is a bitmask over values: bit v set <=> v in the span so far
    fn rec(dim: u8, size: u16, t: usize, span: u16, images: &mut [u8; 4], out: &mut Vec<GF2Map>) {
        if t == dim as usize {
            out.push(GF2Map { dim, images: *images });
            return;
        }
        for v in 1..size as u8 {
            if span >> v & 1 == 0 {
                let mut next = span;
                for w in 0..size as u8 {
                    if span >> w & 1 == 1 {
                        next |= 1u16 << (w ^ v);
                    }
                }
                images[t] = v;
                rec(dim, size, t + 1, next, images, out);
            }
        }
        images[t] = 0;
    }
    rec(dim, size, 0, 1, &mut images, &mut out);
    Ok(out)
}

/// A bilinear form given by its Gram matrix, one row bitmask per dimension.
/// The standard form has the identity Gram matrix. Only the sabotage harness
/// ever constructs anything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    dim: u8,
    rows: [u8; 4],
}

impl BilinearForm {
    pub fn standard(dim: u8) -> Self {
        let mut rows = [0u8; 4];
        for t in 0..dim as usize {
            rows[t] = 1 << t;
        }
        Self { dim, rows }
    }

    /// The standard form with one Gram entry flipped.
    pub fn with_flipped_entry(dim: u8, row: usize, col: usize) -> Self {
        let mut form = Self::standard(dim);
        form.rows[row] ^= 1 << col;
        form
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::standard(self.dim)
    }

    #[inline]
    pub fn eval(&self, x: u8, y: u8) -> Bit {
        let mut acc = 0u8;
        for t in 0..self.dim as usize {
            if x >> t & 1 == 1 {
                acc ^= inner_raw(self.rows[t], y);
            }
        }
        acc
    }

    /// `{y : form(x, y) = 0}` on raw values, ascending.
    pub fn orth_raw(&self, x: u8) -> Vec<u8> {
        (0..1u8 << self.dim).filter(|&y| self.eval(x, y) == 0).collect()
    }
}
