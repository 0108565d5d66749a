//! Packed bit tables over `[0, len)`.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitTable {
    words: Vec<u64>,
    len: usize,
}

impl BitTable {
    pub(crate) fn new(len: usize) -> Self {
        BitTable {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        i < self.len && (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    /// Grows (or shrinks) the table; new positions are clear.
    pub(crate) fn resize(&mut self, len: usize) {
        self.words.resize(len.div_ceil(WORD), 0);
        self.len = len;
        self.clear_tail();
    }

    /// 64 bits starting at `start`, which may be negative; positions outside
    /// `[0, len)` read as zero.
    pub(crate) fn read_word(&self, start: isize) -> u64 {
        if start >= self.len as isize || start <= -(WORD as isize) {
            return 0;
        }
        if start < 0 {
            let shift = (-start) as usize;
            return self.read_word(0) << shift;
        }
        let start = start as usize;
        let idx = start / WORD;
        let off = start % WORD;
        let lo = self.words[idx] >> off;
        let hi = if off == 0 {
            0
        } else {
            self.words.get(idx + 1).map_or(0, |w| w << (WORD - off))
        };
        let mut out = lo | hi;
        let avail = self.len - start;
        if avail < WORD {
            out &= (1u64 << avail) - 1;
        }
        out
    }

    /// ORs `bits` (low `count` bits only) into positions `[start, start + count)`.
    pub(crate) fn or_word(&mut self, start: usize, bits: u64, count: usize) {
        debug_assert!(count <= WORD && start + count <= self.len);
        if count == 0 {
            return;
        }
        let bits = if count == WORD {
            bits
        } else {
            bits & ((1u64 << count) - 1)
        };
        let idx = start / WORD;
        let off = start % WORD;
        self.words[idx] |= bits << off;
        if off != 0 && off + count > WORD {
            self.words[idx + 1] |= bits >> (WORD - off);
        }
    }

    /// `self |= other << shift`, truncated to `self.len`.
    pub(crate) fn or_shifted(&mut self, other: &BitTable, shift: usize) {
        let mut pos = shift;
        let end = self.len.min(other.len + shift);
        while pos < end {
            let count = (end - pos).min(WORD);
            let w = other.read_word((pos - shift) as isize);
            self.or_word(pos, w, count);
            pos += count;
        }
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + t)
                }
            })
        })
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl std::fmt::Debug for BitTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}
