use super::{render_forest, Alphabet, Forest, Tree};

struct Tables {
    trees: Vec<Vec<Tree>>,
    forests: Vec<Vec<Forest>>,
}

impl Tables {
    fn build(n_max: usize, alphabet: &Alphabet) -> Self {
        let mut t = Tables {
            trees: vec![Vec::new()],
            forests: vec![vec![Forest::empty()]],
        };
        for n in 1..=n_max {
            let trees: Vec<Tree> = if n == 1 {
                alphabet.all().cloned().map(Tree::leaf).collect()
            } else {
                let mut v = Vec::new();
                for w in alphabet.omega() {
                    for f in &t.forests[n - 1] {
                        v.push(Tree {
                            root: w.clone(),
                            children: f.trees().to_vec(),
                        });
                    }
                }
                v
            };
            t.trees.push(trees);
            let mut forests = Vec::new();
            for k in 1..=n {
                for head in &t.trees[k] {
                    for tail in &t.forests[n - k] {
                        let mut trees = Vec::with_capacity(1 + tail.breadth());
                        trees.push(head.clone());
                        trees.extend_from_slice(tail.trees());
                        forests.push(Forest::from_trees(trees));
                    }
                }
            }
            t.forests.push(forests);
        }
        t
    }
}

fn sort_canonical(mut v: Vec<Forest>) -> Vec<Forest> {
    let mut keyed: Vec<(String, Forest)> = v.drain(..).map(|f| (render_forest(&f), f)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, f)| f).collect()
}

/// Every forest with exactly `n` vertices, sorted by canonical text.
pub fn forests_of_size(n: usize, alphabet: &Alphabet) -> Vec<Forest> {
    let mut t = Tables::build(n, alphabet);
    sort_canonical(t.forests.swap_remove(n))
}

/// Every forest with at most `n_max` vertices, each exactly once, ordered
/// by vertex count and then canonical text.
pub fn enumerate_forests(n_max: usize, alphabet: &Alphabet) -> Vec<Forest> {
    Tables::build(n_max, alphabet)
        .forests
        .into_iter()
        .flat_map(sort_canonical)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn ax() -> Alphabet {
        Alphabet::new(&["a"], &["x"]).unwrap()
    }

    fn texts(v: &[Forest]) -> Vec<String> {
        v.iter().map(render_forest).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(texts(&enumerate_forests(0, &ax())), ["1"]);
        assert_eq!(texts(&enumerate_forests(1, &ax())), ["1", "a", "x"]);
        assert_eq!(
            texts(&enumerate_forests(2, &ax())),
            ["1", "a", "x", "a a", "a x", "a[a]", "a[x]", "x a", "x x"]
        );
    }

    /// Independent count: planar forests on n vertices number Catalan(n);
    /// brute-force the decorations over shapes instead.
    fn brute_count(n: usize, omega: usize, xs: usize) -> usize {
        // shapes as Dyck-like encodings: count forests via recursion on
        // (first tree size, rest), weighting leaves by |Ω|+|X| and internal
        // vertices by |Ω|.
        fn forests(n: usize, o: usize, x: usize) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=n).map(|k| trees(k, o, x) * forests(n - k, o, x)).sum()
        }
        fn trees(k: usize, o: usize, x: usize) -> usize {
            if k == 1 {
                o + x
            } else {
                o * forests(k - 1, o, x)
            }
        }
        forests(n, omega, xs)
    }

    #[test]
    fn distinct_and_counted() {
        let alpha = Alphabet::new(&["a", "b"], &["x"]).unwrap();
        for n in 0..=5 {
            let v = forests_of_size(n, &alpha);
            let set: HashSet<_> = v.iter().collect();
            assert_eq!(set.len(), v.len());
            assert_eq!(v.len(), brute_count(n, 2, 1));
            assert!(v.iter().all(|f| f.nvertices() == n));
        }
    }
}
