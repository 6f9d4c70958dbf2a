//! Randomized agreement between the bit-packed routines and a deliberately
//! naive reference: one `u8` per entry, textbook Gaussian elimination, no
//! packing tricks.  The two implementations share no code, so agreement on
//! random inputs is strong evidence that the packed word arithmetic is right.

use gf2::{BitMatrix, BitVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Entry-by-entry Gaussian elimination over GF(2); returns the rank.
fn naive_rank(m: &[Vec<u8>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<u8>> = m.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] == 1) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in 0..rows {
            if r != rank && a[r][col] == 1 {
                for c in 0..cols {
                    a[r][c] ^= a[rank][c];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn random_instance(rng: &mut ChaCha8Rng, max_dim: usize) -> (BitMatrix, Vec<Vec<u8>>) {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let naive: Vec<Vec<u8>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..=1u8)).collect())
        .collect();
    let packed = BitMatrix::from_fn(rows, cols, |i, j| naive[i][j] == 1);
    (packed, naive)
}

#[test]
fn rank_matches_naive_elimination_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x20c0_11ab);
    for _ in 0..300 {
        let (packed, naive) = random_instance(&mut rng, 64);
        assert_eq!(packed.rank(), naive_rank(&naive));
    }
    // The sizes named in the packed-rank contract.
    for _ in 0..50 {
        let rows = 20;
        let cols = 30;
        let naive: Vec<Vec<u8>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(0..=1u8)).collect())
            .collect();
        let packed = BitMatrix::from_fn(rows, cols, |i, j| naive[i][j] == 1);
        assert_eq!(packed.rank(), naive_rank(&naive));
    }
}

#[test]
fn kernel_dimension_and_membership_match_naive_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57_0002);
    for _ in 0..200 {
        let (packed, naive) = random_instance(&mut rng, 48);
        let kernel = packed.kernel_basis();
        assert_eq!(kernel.dim(), packed.cols() - naive_rank(&naive));
        for v in kernel.basis_rows() {
            assert!(packed.mul_vec(&v).is_zero());
        }
    }
}

#[test]
fn solve_agrees_with_naive_consistency_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x501_7e03);
    for _ in 0..200 {
        let (packed, naive) = random_instance(&mut rng, 40);
        let cols = packed.cols();
        let b: Vec<u8> = (0..packed.rows()).map(|_| rng.gen_range(0..=1u8)).collect();
        let b_vec = BitVec::from_bools(&b.iter().map(|&x| x == 1).collect::<Vec<_>>());

        // Naive consistency: rank(A) == rank(A|b).
        let mut augmented = naive.clone();
        for (row, &bit) in augmented.iter_mut().zip(&b) {
            row.push(bit);
        }
        let consistent = naive_rank(&naive) == naive_rank(&augmented);

        match packed.solve(&b_vec) {
            Some(x) => {
                assert!(consistent, "packed solver produced a solution to an inconsistent system");
                assert_eq!(x.len(), cols);
                assert_eq!(packed.mul_vec(&x), b_vec);
            }
            None => assert!(!consistent, "packed solver missed a solution"),
        }
    }
}
