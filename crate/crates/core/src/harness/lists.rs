use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::intmath::{is_prime_u64, modpow_u64};

#[derive(Debug, Error)]
pub enum ListError {
    #[error("cannot read list file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: cannot parse {text:?} as a nonnegative integer")]
    Parse { line: usize, text: String },
}

/// Reads candidates from a text file: one decimal integer per line,
/// `#` starts a comment, blank lines are skipped.
pub fn parse_list_file(path: &Path) -> Result<Vec<BigUint>, ListError> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let text = match line.split_once('#') {
            Some((before, _)) => before.trim(),
            None => line.trim(),
        };
        if text.is_empty() {
            continue;
        }
        let n = BigUint::from_str(text).map_err(|_| ListError::Parse {
            line: idx + 1,
            text: text.to_string(),
        })?;
        out.push(n);
    }
    Ok(out)
}

/// Odd composite n < limit with 2^(n−1) ≡ 1 (mod n).
pub fn fermat_base2_pseudoprimes(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 9;
    while n < limit {
        if !is_prime_u64(n) && modpow_u64(2, n - 1, n) == 1 {
            out.push(n);
        }
        n += 2;
    }
    out
}

/// Carmichael numbers below `limit` via a smallest-prime-factor sieve and
/// the Korselt criterion: n squarefree and p−1 | n−1 for every prime p | n.
pub fn carmichael_numbers(limit: u64) -> Vec<u64> {
    assert!(limit <= 100_000_000, "sieve limit capped for memory");
    let limit = limit as usize;
    let mut spf = vec![0u32; limit.max(2)];
    for i in 2..limit {
        if spf[i] == 0 {
            for j in (i..limit).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    let mut out = Vec::new();
    'next: for n in (9..limit).step_by(2) {
        if spf[n] == n as u32 {
            continue; // prime
        }
        let mut m = n;
        let mut factors = 0;
        while m > 1 {
            let p = spf[m] as usize;
            m /= p;
            if m % p == 0 {
                continue 'next; // not squarefree
            }
            if (n - 1) % (p - 1) != 0 {
                continue 'next;
            }
            factors += 1;
        }
        // Korselt plus compositeness forces at least three prime factors
        if factors >= 3 {
            out.push(n as u64);
        }
    }
    out
}
