use ncvir::partition::{lr_coeff, lr_expand, partitions_of};
use ncvir::Partition;
use ncvir_oracle::lr_tableaux;

fn all_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[test]
fn enumeration_is_exhaustive_and_sorted() {
    for n in 0..=8 {
        let ps = partitions_of(n);
        assert!(ps.iter().all(|p| p.weight() == n));
        assert!(ps.windows(2).all(|w| w[0] > w[1]), "not lex descending at {n}");
    }
    assert_eq!(partitions_of(5).len(), 7);
}

#[test]
fn lr_matches_tableau_count() {
    for lam in all_up_to(4) {
        for mu in all_up_to(4) {
            if lam.weight() + mu.weight() > 6 {
                continue;
            }
            for nu in partitions_of(lam.weight() + mu.weight()) {
                assert_eq!(
                    lr_coeff(&lam, &mu, &nu),
                    lr_tableaux(lam.parts(), mu.parts(), nu.parts()),
                    "N^{nu}_{{{lam},{mu}}}"
                );
            }
        }
    }
}

#[test]
fn symmetry_and_conjugation() {
    for lam in all_up_to(6) {
        for mu in all_up_to(6 - lam.weight()) {
            for (nu, c) in lr_expand(&lam, &mu).iter() {
                assert_eq!(lr_coeff(&mu, &lam, nu), *c);
                assert_eq!(lr_coeff(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()), *c);
            }
        }
    }
}

#[test]
fn pieri_counts_addable_boxes() {
    let one = Partition::row(1);
    for lam in all_up_to(5) {
        let parts = lam.parts();
        let addable = (0..=parts.len()).filter(|&i| i == 0 || parts[i - 1] > lam.part(i)).count();
        let total: u64 = lr_expand(&lam, &one).values().sum();
        assert_eq!(total as usize, addable, "{lam}");
        assert!(lr_expand(&lam, &one).values().all(|&c| c == 1));
    }
}

#[test]
fn conjugation_is_an_involution() {
    for lam in all_up_to(8) {
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(lam.conjugate().weight(), lam.weight());
    }
}
