//! Compact square bit matrix used for edge-adjacency tables and color masks.

/// A dense symmetric boolean relation over `n` items, one bit per pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeroed(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize) {
        self.set(i, j);
        self.set(j, i);
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words_per_row + j / 64] |= 1u64 << (j % 64);
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words_per_row + j / 64] & (1u64 << (j % 64)) != 0
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn row_count_ones(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Does row `i` intersect the given mask (same word layout)?
    pub fn row_intersects(&self, i: usize, mask: &[u64]) -> bool {
        self.row(i).iter().zip(mask).any(|(a, b)| a & b != 0)
    }

    /// Calls `f` with every set column index of row `i`, ascending.
    pub fn for_each_in_row(&self, i: usize, mut f: impl FnMut(usize)) {
        for (w, &word) in self.row(i).iter().enumerate() {
            let mut word = word;
            while word != 0 {
                let b = word.trailing_zeros() as usize;
                f(w * 64 + b);
                word &= word - 1;
            }
        }
    }

    pub fn iter_row(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_in_row(i, |j| out.push(j));
        out
    }
}

/// A plain bit mask with the same word layout as [`BitMatrix`] rows.
#[derive(Debug, Clone)]
pub struct BitMask {
    words: Vec<u64>,
}

impl BitMask {
    pub fn zeroed(n: usize) -> Self {
        BitMask {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_and_row_ops() {
        let mut m = BitMatrix::zeroed(130);
        m.set_sym(0, 129);
        m.set_sym(65, 7);
        assert!(m.get(129, 0) && m.get(0, 129));
        assert!(m.get(7, 65));
        assert!(!m.get(1, 2));
        assert_eq!(m.row_count_ones(0), 1);
        assert_eq!(m.iter_row(65), vec![7]);

        let mut mask = BitMask::zeroed(130);
        mask.set(129);
        assert!(m.row_intersects(0, mask.words()));
        assert!(!m.row_intersects(65, mask.words()));
    }
}
