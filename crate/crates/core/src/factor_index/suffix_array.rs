//! Prefix-doubling suffix array with radix passes, and Kasai's LCP array.

pub(crate) fn suffix_array(text: &[u8]) -> Vec<usize> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    // Rank 0 is reserved for "past the end".
    let mut rank: Vec<usize> = text.iter().map(|&c| c as usize + 1).collect();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut scratch = vec![0usize; n];
    let mut next_rank = vec![0usize; n];
    let mut max_rank = 256;
    let mut k = 1;
    loop {
        let second = |i: usize| if i + k < n { rank[i + k] } else { 0 };
        counting_sort(&sa, &mut scratch, max_rank, second);
        counting_sort(&scratch, &mut sa, max_rank, |i| rank[i]);

        next_rank[sa[0]] = 1;
        for j in 1..n {
            let (a, b) = (sa[j - 1], sa[j]);
            let differs = rank[a] != rank[b] || second(a) != second(b);
            next_rank[b] = next_rank[a] + usize::from(differs);
        }
        std::mem::swap(&mut rank, &mut next_rank);
        max_rank = rank[sa[n - 1]];
        if max_rank == n || k >= n {
            break;
        }
        k *= 2;
    }
    sa
}

/// Stable counting sort of `input` into `output` by `key`, keys in `0..=max_key`.
fn counting_sort(input: &[usize], output: &mut [usize], max_key: usize, key: impl Fn(usize) -> usize) {
    let mut counts = vec![0usize; max_key + 2];
    for &i in input {
        counts[key(i) + 1] += 1;
    }
    for b in 1..counts.len() {
        counts[b] += counts[b - 1];
    }
    for &i in input {
        let slot = &mut counts[key(i)];
        output[*slot] = i;
        *slot += 1;
    }
}

/// `lcp[i]` is the longest common prefix of suffixes `sa[i-1]` and `sa[i]`;
/// `lcp[0] = 0`.
pub(crate) fn lcp_array(text: &[u8], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0usize; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}
