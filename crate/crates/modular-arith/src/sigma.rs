//! Twisted and classical divisor sums.

/// The nontrivial character mod 3 as a function on integers:
/// +1 for d = 1 mod 3, -1 for d = 2 mod 3, 0 for 3 | d.
pub fn chi3(d: u64) -> i64 {
    match d % 3 {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

/// sigma_k^chi(n) = sum over divisors d of n of chi(d) d^k.
pub fn sigma_chi(k: u32, n: u64) -> i64 {
    assert!(n >= 1);
    let mut total: i64 = 0;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += chi3(d) * (d as i64).pow(k);
            let e = n / d;
            if e != d {
                total += chi3(e) * (e as i64).pow(k);
            }
        }
        d += 1;
    }
    total
}

/// Classical sigma_k(n) = sum of d^k over divisors.
pub fn sigma(k: u32, n: u64) -> i64 {
    assert!(n >= 1);
    let mut total: i64 = 0;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += (d as i64).pow(k);
            let e = n / d;
            if e != d {
                total += (e as i64).pow(k);
            }
        }
        d += 1;
    }
    total
}

/// Sweep the congruence
/// `sigma_0^chi(n/2) + sigma_0^chi(n) = sigma_2^chi(n) mod 2` for all
/// `n <= bound` (with the n/2 term zero for odd n), via a divisor sieve.
/// Returns the first violating n, if any.
pub fn sigma_congruence_sweep(bound: u64) -> Option<u64> {
    let len = bound as usize + 1;
    let mut s0 = vec![0i64; len];
    let mut s2 = vec![0i64; len];
    for d in 1..=bound {
        let c = chi3(d);
        if c == 0 {
            continue;
        }
        let d2 = c * (d as i64) * (d as i64);
        let mut m = d as usize;
        while m < len {
            s0[m] += c;
            s2[m] += d2;
            m += d as usize;
        }
    }
    for n in 1..=bound {
        let half = if n % 2 == 0 { s0[(n / 2) as usize] } else { 0 };
        if (half + s0[n as usize] - s2[n as usize]) % 2 != 0 {
            return Some(n);
        }
    }
    None
}
