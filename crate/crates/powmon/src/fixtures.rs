//! Small groups given by multiplication tables with the identity at index 0.

use std::collections::HashMap;

use powmon_core::GroundMonoid;

type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // apply b first, then a
    b.iter().map(|&i| a[i]).collect()
}

/// Table of the permutation group generated by `gens`, elements numbered in
/// breadth-first order from the identity.
pub fn permutation_group(degree: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let id: Perm = (0..degree).collect();
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for g in gens {
            let next = compose(&cur, g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
    }
    elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
        .collect()
}

/// Direct product of two tables, `(a, b)` numbered `a * |B| + b`.
pub fn direct_product(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (m, n) = (a.len(), b.len());
    (0..m * n)
        .map(|x| (0..m * n).map(|y| a[x / n][y / n] * n + b[x % n][y % n]).collect())
        .collect()
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

pub fn c3xc3() -> Vec<Vec<usize>> {
    direct_product(&cyclic_table(3), &cyclic_table(3))
}

pub fn klein() -> Vec<Vec<usize>> {
    direct_product(&cyclic_table(2), &cyclic_table(2))
}

pub fn s3() -> Vec<Vec<usize>> {
    permutation_group(3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

pub fn d4() -> Vec<Vec<usize>> {
    permutation_group(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

pub fn d6() -> Vec<Vec<usize>> {
    permutation_group(6, &[vec![1, 2, 3, 4, 5, 0], vec![0, 5, 4, 3, 2, 1]])
}

pub fn a4() -> Vec<Vec<usize>> {
    permutation_group(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// Quaternion group; elements `±1, ±i, ±j, ±k` as `sign * 4 + unit`.
pub fn q8() -> Vec<Vec<usize>> {
    // unit products: (sign flip, unit) for 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (s, u) = UNIT[x % 4][y % 4];
                    ((x / 4 + y / 4 + s) % 2) * 4 + u
                })
                .collect()
        })
        .collect()
}

/// Named fixtures shipped as table files.
pub fn named(name: &str) -> Option<Vec<Vec<usize>>> {
    Some(match name {
        "c3xc3" => c3xc3(),
        "klein" => klein(),
        "s3" => s3(),
        "d4" => d4(),
        "q8" => q8(),
        "d6" => d6(),
        "a4" => a4(),
        _ => return None,
    })
}

pub const NAMES: [&str; 7] = ["c3xc3", "klein", "s3", "d4", "q8", "d6", "a4"];

pub fn ground(name: &str) -> Option<GroundMonoid> {
    named(name).map(|t| GroundMonoid::from_table(&t).expect("fixture tables are valid groups"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_groups_of_the_right_shape() {
        let expect = [
            ("c3xc3", 9, true),
            ("klein", 4, true),
            ("s3", 6, false),
            ("d4", 8, false),
            ("q8", 8, false),
            ("d6", 12, false),
            ("a4", 12, false),
        ];
        for (name, size, abelian) in expect {
            let g = ground(name).unwrap();
            assert!(g.is_group(), "{name}");
            assert_eq!(g.size(), size, "{name}");
            assert_eq!(g.is_commutative(), abelian, "{name}");
        }
    }

    #[test]
    fn element_orders_distinguish_d4_and_q8() {
        let count = |name: &str| {
            let c = ground(name).unwrap().classify().unwrap();
            c.square_roots_of_identity.len()
        };
        assert_eq!(count("d4"), 5);
        assert_eq!(count("q8"), 1);
        assert_eq!(count("klein"), 3);
        assert_eq!(count("c3xc3"), 0);
    }

    #[test]
    fn shipped_files_match() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
        for name in NAMES {
            let text = std::fs::read_to_string(dir.join(format!("{name}.txt"))).unwrap();
            assert_eq!(crate::table_file::parse_rows(&text).unwrap(), named(name).unwrap(), "{name}");
        }
    }
}
