use super::check_degree;
use super::partition::Partition;
use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn catalan(m: usize) -> u64 {
    binomial(2 * m, m) / (m as u64 + 1)
}

/// Standard tableaux of shape `(n-k, k)`: `C(n,k) - C(n,k-1)`.
pub fn syt_count(n: usize, k: usize) -> Result<u64> {
    check_degree(n, k)?;
    Ok(if k == 0 { 1 } else { binomial(n, k) - binomial(n, k - 1) })
}

/// Complex dimension of the Springer variety of Jordan type `lambda`:
/// `Σ_i (i-1) λ_i`.
pub fn springer_dimension(lambda: &Partition) -> usize {
    lambda.parts().iter().enumerate().map(|(i, p)| i * p).sum()
}

/// Number of fillings of `mu` with content `lambda` (weakly increasing rows,
/// strictly increasing columns) when `lambda` has at most two rows. Such a
/// filling uses only the values 1 and 2, so it exists iff `mu` has at most
/// two rows and `mu_1 >= lambda_1`, and is then unique.
pub fn kostka_two_row(mu: &Partition, lambda: &Partition) -> Result<u64> {
    if lambda.rows() > 2 {
        return Err(Error::InvalidPartition(format!("{lambda} has more than two rows")));
    }
    if mu.size() != lambda.size() || mu.rows() > 2 {
        return Ok(0);
    }
    Ok(u64::from(mu.part(0) >= lambda.part(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchcore::partitions;
    use crate::matchcore::standard_tableaux;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_count(4, 2).unwrap(), 2);
        assert_eq!(syt_count(7, 0).unwrap(), 1);
        assert_eq!(syt_count(6, 2).unwrap(), 9);
        assert!(syt_count(4, 3).is_err());
    }

    #[test]
    fn syt_closed_form_matches_enumeration() {
        for n in 0..=12 {
            for k in 0..=n / 2 {
                assert_eq!(syt_count(n, k).unwrap(), standard_tableaux(n, k).unwrap().len() as u64);
            }
        }
    }

    #[test]
    fn syt_sum_is_central_binomial() {
        for n in (0..=12).step_by(2) {
            let total: u64 = (0..=n / 2).map(|k| syt_count(n, k).unwrap()).sum();
            assert_eq!(total, binomial(n, n / 2));
        }
    }

    #[test]
    fn catalan_values() {
        let c: Vec<u64> = (0..=6).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(springer_dimension(&p(&[5])), 0);
        assert_eq!(springer_dimension(&p(&[3, 3])), 3);
        assert_eq!(springer_dimension(&p(&[2, 2, 1])), 4);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_two_row(&p(&[3, 1]), &p(&[2, 2])).unwrap(), 1);
        assert_eq!(kostka_two_row(&p(&[2, 2]), &p(&[3, 1])).unwrap(), 0);
        assert_eq!(kostka_two_row(&p(&[5]), &p(&[5])).unwrap(), 1);
        assert!(kostka_two_row(&p(&[3]), &p(&[1, 1, 1])).is_err());
    }

    /// Brute-force count of semistandard fillings of `mu` with content
    /// `lambda`.
    fn brute_kostka(mu: &Partition, lambda: &Partition) -> u64 {
        let cells: Vec<(usize, usize)> = mu
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let mut remaining: Vec<usize> = lambda.parts().to_vec();
        let mut grid: Vec<Vec<usize>> = mu.parts().iter().map(|&l| vec![0; l]).collect();
        fn go(idx: usize, cells: &[(usize, usize)], rem: &mut Vec<usize>, grid: &mut Vec<Vec<usize>>) -> u64 {
            if idx == cells.len() {
                return 1;
            }
            let (r, c) = cells[idx];
            let mut total = 0;
            for v in 0..rem.len() {
                if rem[v] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v + 1 {
                    continue;
                }
                if r > 0 && grid[r - 1][c] > v {
                    continue;
                }
                rem[v] -= 1;
                grid[r][c] = v + 1;
                total += go(idx + 1, cells, rem, grid);
                grid[r][c] = 0;
                rem[v] += 1;
            }
            total
        }
        if mu.size() != lambda.size() {
            return 0;
        }
        go(0, &cells, &mut remaining, &mut grid)
    }

    #[test]
    fn kostka_matches_brute_force() {
        for n in 0..=8 {
            for lambda in partitions(n).into_iter().filter(|l| l.rows() <= 2) {
                for mu in partitions(n) {
                    assert_eq!(
                        kostka_two_row(&mu, &lambda).unwrap(),
                        brute_kostka(&mu, &lambda),
                        "mu = {mu}, lambda = {lambda}"
                    );
                }
            }
        }
    }
}
