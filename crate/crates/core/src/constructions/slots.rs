//! Writing a target as a sum of slot values, each `0` or in `[2, cap]`.

/// Returns per-slot values (in input order) summing to `target`, or `None`
/// when no such assignment exists.
///
/// Slots are filled greedily in order of decreasing capacity. The only way
/// greedy filling can get stuck is a leftover of exactly 1; that is repaired
/// by lowering a slot holding at least 3 and opening an empty slot with 2.
/// If neither move is available the target is not representable.
pub fn solve_slots(caps: &[usize], target: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..caps.len()).filter(|&k| caps[k] >= 2).collect();
    order.sort_by(|&a, &b| caps[b].cmp(&caps[a]).then(a.cmp(&b)));

    let mut values = vec![0; caps.len()];
    let mut rest = target;
    for &k in &order {
        if rest < 2 {
            break;
        }
        let take = caps[k].min(rest);
        values[k] = take;
        rest -= take;
    }
    match rest {
        0 => Some(values),
        1 => {
            let donor = order.iter().copied().find(|&k| values[k] >= 3)?;
            let open = order.iter().copied().find(|&k| values[k] == 0)?;
            values[donor] -= 1;
            values[open] = 2;
            Some(values)
        }
        _ => None,
    }
}

/// Every sum reachable by some assignment, by direct enumeration.
#[cfg(test)]
pub(crate) fn reachable_sums(caps: &[usize]) -> Vec<bool> {
    let total: usize = caps.iter().sum();
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &c in caps {
        let prev = reach.clone();
        for (s, _) in prev.iter().enumerate().filter(|(_, r)| **r) {
            for x in 2..=c {
                reach[s + x] = true;
            }
        }
    }
    reach
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(caps: &[usize], target: usize, values: &[usize]) {
        assert_eq!(values.iter().sum::<usize>(), target);
        for (v, c) in values.iter().zip(caps) {
            assert!(*v == 0 || (2..=*c).contains(v), "{values:?} vs caps {caps:?}");
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(solve_slots(&[3, 3], 0), Some(vec![0, 0]));
        assert_eq!(solve_slots(&[3, 3], 1), None);
        assert_eq!(solve_slots(&[3, 3], 4), Some(vec![2, 2]));
        assert_eq!(solve_slots(&[3, 3], 5), Some(vec![3, 2]));
        assert_eq!(solve_slots(&[2, 2, 2], 3), None);
        assert_eq!(solve_slots(&[2, 2, 3], 6), Some(vec![2, 2, 2]));
        assert_eq!(solve_slots(&[2, 2, 3], 8), None);
        assert_eq!(solve_slots(&[], 0), Some(vec![]));
        assert_eq!(solve_slots(&[1, 1], 2), None);
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(caps in prop::collection::vec(0usize..6, 0..7)) {
            prop_assume!(caps.iter().sum::<usize>() <= 20);
            let reach = reachable_sums(&caps);
            for target in 0..reach.len() + 2 {
                let got = solve_slots(&caps, target);
                let expect = reach.get(target).copied().unwrap_or(false);
                prop_assert_eq!(got.is_some(), expect, "caps {:?} target {}", caps, target);
                if let Some(v) = got {
                    check(&caps, target, &v);
                }
            }
        }
    }
}
