//! Smallest-prime-factor sieve and divisor enumeration.
//!
//! One sieve is built per run (grow-only global cache) and backs
//! factorization, `Omega(n)`, divisor enumeration, and the expansion of
//! `ln n` into log symbols. Setup is O(N log log N), queries O(log n).

use std::sync::{Arc, RwLock};

/// Smallest-prime-factor table for `2..=limit`.
#[derive(Debug)]
pub struct Sieve {
    spf: Vec<u32>,
}

impl Sieve {
    pub fn new(limit: usize) -> Self {
        let limit = limit.max(2);
        let mut spf: Vec<u32> = vec![0; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Sieve { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Prime factorization `n = p_1^{m_1} * ... * p_k^{m_k}` with ascending
    /// primes. `factorize(1)` is the empty product.
    pub fn factorize(&self, n: u64) -> Vec<(u64, u32)> {
        assert!(
            n >= 1 && n as usize <= self.limit(),
            "factorize({n}) out of sieve range"
        );
        let mut out = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    /// Number of prime factors counted with multiplicity.
    pub fn big_omega(&self, n: u64) -> u32 {
        self.factorize(n).iter().map(|&(_, e)| e).sum()
    }

    /// All divisors of `n` in ascending order.
    pub fn divisors(&self, n: u64) -> Vec<u64> {
        let mut divs = vec![1u64];
        for (p, e) in self.factorize(n) {
            let base = divs.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                divs.extend(base.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit() as u64).filter(move |&n| self.is_prime(n))
    }
}

static SHARED: RwLock<Option<Arc<Sieve>>> = RwLock::new(None);

/// A process-wide sieve covering at least `2..=limit`. The table only ever
/// grows; repeated calls at the same order are free.
pub fn shared(limit: usize) -> Arc<Sieve> {
    if let Some(s) = SHARED.read().unwrap().as_ref() {
        if s.limit() >= limit {
            return Arc::clone(s);
        }
    }
    let mut guard = SHARED.write().unwrap();
    if let Some(s) = guard.as_ref() {
        if s.limit() >= limit {
            return Arc::clone(s);
        }
    }
    let grown = Arc::new(Sieve::new(limit.next_power_of_two().max(64)));
    *guard = Some(Arc::clone(&grown));
    grown
}
