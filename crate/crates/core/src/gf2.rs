//! Dense linear algebra over GF(2) on packed bit vectors.
//!
//! Vectors are `Vec<u64>` with bit i in word i / 64. Vectors of different word
//! lengths are treated as zero-padded.

/// Bit vector over GF(2).
pub type BitVec = Vec<u64>;

#[inline]
pub fn get_bit(v: &[u64], i: usize) -> bool {
    v.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
}

#[inline]
pub fn set_bit(v: &mut BitVec, i: usize) {
    if v.len() <= i / 64 {
        v.resize(i / 64 + 1, 0);
    }
    v[i / 64] |= 1 << (i % 64);
}

pub fn unit(i: usize, bits: usize) -> BitVec {
    let mut v = vec![0; bits.div_ceil(64).max(i / 64 + 1)];
    set_bit(&mut v, i);
    v
}

#[inline]
fn xor_into(dst: &mut BitVec, src: &[u64]) {
    if dst.len() < src.len() {
        dst.resize(src.len(), 0);
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Index of the lowest set bit.
pub fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

pub fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|w| *w == 0)
}

/// Reduced row echelon basis of a growing subspace. Pivot of a row is its lowest
/// set bit, and each pivot bit is cleared in every other row.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, BitVec)>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut BitVec) {
        for (p, row) in &self.rows {
            if get_bit(v, *p) {
                xor_into(v, row);
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = lowest_bit(&w) else { return false };
        for (_, row) in self.rows.iter_mut() {
            if get_bit(row, p) {
                xor_into(row, &w);
            }
        }
        self.rows.push((p, w));
        true
    }

    /// Rows sorted by pivot index.
    pub fn into_rows(mut self) -> Vec<BitVec> {
        self.rows.sort_by_key(|(p, _)| *p);
        self.rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// GF(2)-rank of a family of vectors.
pub fn rank(vectors: &[BitVec]) -> usize {
    let mut ech = Echelon::new();
    vectors.iter().filter(|v| ech.insert(v)).count()
}

/// Basis of { t : sum_i t_i images[i] = 0 }, returned in reduced echelon form with
/// rows sorted by pivot. Each row has `images.len()` meaningful bits.
pub fn null_space(images: &[BitVec]) -> Vec<BitVec> {
    let k = images.len();
    let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
    let mut deps = Echelon::new();
    for (i, img) in images.iter().enumerate() {
        let mut value = img.clone();
        let mut tag = unit(i, k);
        for (p, row, row_tag) in &pivots {
            if get_bit(&value, *p) {
                xor_into(&mut value, row);
                xor_into(&mut tag, row_tag);
            }
        }
        match lowest_bit(&value) {
            Some(p) => pivots.push((p, value, tag)),
            None => {
                deps.insert(&tag);
            }
        }
    }
    deps.into_rows()
}
