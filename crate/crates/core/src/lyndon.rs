//! Lyndon words over a finite ordered alphabet of `u8` letters.
//!
//! Words compare lexicographically with a proper prefix smaller than any
//! extension, which is the order `[u8]` already implements.

/// A word strictly smaller than each of its proper suffixes (equivalently,
/// than each proper rotation).
pub fn is_lyndon(word: &[u8]) -> bool {
    !word.is_empty() && (1..word.len()).all(|i| word[i..] > *word)
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
/// Returns `None` for single letters.
pub fn standard_factorization(word: &[u8]) -> Option<(&[u8], &[u8])> {
    debug_assert!(is_lyndon(word));
    (1..word.len())
        .find(|&i| is_lyndon(&word[i..]))
        .map(|i| word.split_at(i))
}

/// All Lyndon words of exactly `length` letters over `0..alphabet_size`,
/// in increasing lexicographic order (Duval's generation algorithm).
pub fn lyndon_words(alphabet_size: usize, length: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if alphabet_size == 0 || length == 0 {
        return out;
    }
    let top = (alphabet_size - 1) as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == length {
            out.push(w.clone());
        }
        // extend periodically to full length, then step to the successor
        let m = w.len();
        while w.len() < length {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    out
}
