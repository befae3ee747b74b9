//! Finite groups given by generator multiplication tables.
//!
//! Elements are `0..order` with `0` the identity. A breadth-first search
//! from the generators gives every element a shortest word, and a general
//! product `x·y` walks the word of `y` through the right table.

use std::collections::HashMap;

use crate::Error;

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    ngens: usize,
    right: Vec<u32>,
    left: Vec<u32>,
    word_start: Vec<u32>,
    words: Vec<u8>,
    inverse: Vec<u32>,
    gen_order: Vec<usize>,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl FiniteGroup {
    /// Build from tables `right[x*ngens + g] = x·g` and `left[g*order + x] = g·x`.
    /// Element 0 must be the identity.
    pub fn from_tables(order: usize, ngens: usize, right: Vec<u32>, left: Vec<u32>) -> FiniteGroup {
        assert_eq!(right.len(), order * ngens);
        assert_eq!(left.len(), order * ngens);
        let mut g = FiniteGroup {
            order,
            ngens,
            right,
            left,
            word_start: Vec::new(),
            words: Vec::new(),
            inverse: Vec::new(),
            gen_order: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        g.compute_words();
        g.gen_order = (0..ngens).map(|i| g.element_order(g.generator(i))).collect();
        g.compute_inverses();
        g.compute_classes();
        g
    }

    fn compute_words(&mut self) {
        let mut parent: Vec<(u32, u8)> = vec![(u32::MAX, 0); self.order];
        let mut seen = vec![false; self.order];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut bfs = Vec::with_capacity(self.order);
        while let Some(x) = queue.pop_front() {
            bfs.push(x);
            for gi in 0..self.ngens {
                let y = self.right[x * self.ngens + gi] as usize;
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = (x as u32, gi as u8);
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(bfs.len(), self.order, "generators do not generate");
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); self.order];
        for &x in &bfs[1..] {
            let (p, gi) = parent[x];
            let mut w = words[p as usize].clone();
            w.push(gi);
            words[x] = w;
        }
        self.word_start = Vec::with_capacity(self.order + 1);
        self.words.clear();
        for w in &words {
            self.word_start.push(self.words.len() as u32);
            self.words.extend_from_slice(w);
        }
        self.word_start.push(self.words.len() as u32);
    }

    fn compute_inverses(&mut self) {
        // (x·g)⁻¹ = g⁻¹·x⁻¹, filled along the word tree
        let mut inv = vec![u32::MAX; self.order];
        inv[0] = 0;
        let mut by_len: Vec<usize> = (0..self.order).collect();
        by_len.sort_by_key(|&x| self.word(x).len());
        for x in by_len.into_iter().skip(1) {
            let w = self.word(x);
            let gi = *w.last().unwrap() as usize;
            let prefix = self.word_prefix(&w[..w.len() - 1]);
            let mut y = inv[prefix] as usize;
            for _ in 0..self.gen_order[gi] - 1 {
                y = self.left_mul(gi, y);
            }
            inv[x] = y as u32;
        }
        self.inverse = inv;
    }

    fn word_prefix(&self, w: &[u8]) -> usize {
        w.iter().fold(0, |x, &g| self.right_mul(x, g as usize))
    }

    fn compute_classes(&mut self) {
        let mut class_of = vec![u32::MAX; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if class_of[x] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[x] = id;
            let mut stack = vec![x];
            let mut size = 0;
            while let Some(y) = stack.pop() {
                size += 1;
                for gi in 0..self.ngens {
                    let z = self.conjugate_by_generator(gi, y);
                    if class_of[z] == u32::MAX {
                        class_of[z] = id;
                        stack.push(z);
                    }
                }
            }
            classes.push(ConjClass { rep: x, size });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    /// g·y·g⁻¹ for a generator g.
    fn conjugate_by_generator(&self, gi: usize, y: usize) -> usize {
        let mut z = y;
        for _ in 0..self.gen_order[gi] - 1 {
            z = self.right_mul(z, gi);
        }
        self.left_mul(gi, z)
    }

    /// Reorder classes by a key (identity class always first). Representatives stay.
    pub fn sort_classes_by<K: Ord>(&mut self, mut key: impl FnMut(&ConjClass) -> K) {
        let mut idx: Vec<usize> = (0..self.classes.len()).collect();
        let keys: Vec<K> = self.classes.iter().map(&mut key).collect();
        let id_class = self.class_of[0] as usize;
        idx.sort_by(|&a, &b| (a != id_class).cmp(&(b != id_class)).then_with(|| keys[a].cmp(&keys[b])).then(a.cmp(&b)));
        let mut remap = vec![0u32; idx.len()];
        for (new, &old) in idx.iter().enumerate() {
            remap[old] = new as u32;
        }
        self.classes = idx.iter().map(|&i| self.classes[i].clone()).collect();
        for c in self.class_of.iter_mut() {
            *c = remap[*c as usize];
        }
    }

    /// Replace class representatives by the chosen members.
    pub fn set_class_reps(&mut self, reps: Vec<usize>) {
        for (c, r) in self.classes.iter_mut().zip(reps) {
            assert_eq!(self.class_of[r] as usize, self.class_of[c.rep] as usize);
            c.rep = r;
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_generators(&self) -> usize {
        self.ngens
    }

    /// Element index of the `i`-th generator.
    pub fn generator(&self, i: usize) -> usize {
        self.right[i] as usize
    }

    pub fn right_mul(&self, x: usize, gi: usize) -> usize {
        self.right[x * self.ngens + gi] as usize
    }

    pub fn left_mul(&self, gi: usize, x: usize) -> usize {
        self.left[gi * self.order + x] as usize
    }

    /// Shortest word (generator indices, left to right) of an element.
    pub fn word(&self, x: usize) -> &[u8] {
        &self.words[self.word_start[x] as usize..self.word_start[x + 1] as usize]
    }

    pub fn word_length(&self, x: usize) -> usize {
        (self.word_start[x + 1] - self.word_start[x]) as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.word(y).iter().fold(x, |acc, &g| self.right_mul(acc, g as usize))
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// y⁻¹·x·y
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    /// Members of every class, in index order.
    pub fn class_members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes.len()];
        for x in 0..self.order {
            out[self.class_of[x] as usize].push(x);
        }
        out
    }

    /// Class of x⁻¹ for each class.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| self.class_of(self.inv(c.rep))).collect()
    }

    /// Lcm of element orders.
    pub fn exponent(&self) -> usize {
        self.classes.iter().fold(1, |acc, c| num_integer::lcm(acc, self.element_order(c.rep)))
    }

    /// The subgroup generated by the given elements, with its embedding into `self`.
    pub fn subgroup(&self, gens: &[usize]) -> Result<(FiniteGroup, Vec<usize>), Error> {
        if gens.len() > u8::MAX as usize {
            return Err(Error::Unsupported("too many generators".into()));
        }
        if gens.is_empty() {
            return Ok((FiniteGroup::from_tables(1, 0, Vec::new(), Vec::new()), vec![0]));
        }
        let mut elems = vec![0usize];
        let mut index: HashMap<usize, u32> = HashMap::from([(0, 0)]);
        let mut right = Vec::new();
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            for &g in gens {
                let y = self.mul(x, g);
                let next = index.len() as u32;
                let id = *index.entry(y).or_insert_with(|| {
                    elems.push(y);
                    next
                });
                right.push(id);
            }
            head += 1;
        }
        let n = elems.len();
        let mut left = Vec::with_capacity(n * gens.len());
        for &g in gens {
            let w: Vec<u8> = self.word(g).to_vec();
            for &x in &elems {
                let y = w.iter().rev().fold(x, |acc, &l| self.left_mul(l as usize, acc));
                left.push(index[&y]);
            }
        }
        Ok((FiniteGroup::from_tables(n, gens.len(), right, left), elems))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // cyclic group of order n with one generator
    fn cyclic(n: usize) -> FiniteGroup {
        let right: Vec<u32> = (0..n).map(|x| ((x + 1) % n) as u32).collect();
        FiniteGroup::from_tables(n, 1, right.clone(), right)
    }

    // S3 acting on 3 points, generated by two transpositions
    fn s3() -> FiniteGroup {
        let gens = [[1u8, 0, 2], [0, 2, 1]];
        let compose = |a: &[u8; 3], b: &[u8; 3]| -> [u8; 3] { [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]] };
        let mut order = vec![[0u8, 1, 2]];
        let mut h = 0;
        while h < order.len() {
            for g in &gens {
                let y = compose(&order[h], g);
                if !order.contains(&y) {
                    order.push(y);
                }
            }
            h += 1;
        }
        let pos = |p: [u8; 3]| order.iter().position(|q| *q == p).unwrap() as u32;
        let right = order.iter().flat_map(|x| gens.iter().map(move |g| (x, g))).map(|(x, g)| pos(compose(x, g))).collect();
        let left = gens.iter().flat_map(|g| order.iter().map(move |x| (g, x))).map(|(g, x)| pos(compose(g, x))).collect();
        FiniteGroup::from_tables(6, 2, right, left)
    }

    #[test]
    fn cyclic_structure() {
        let g = cyclic(6);
        assert_eq!(g.num_classes(), 6);
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.mul(2, 5), 1);
        assert_eq!(g.inv(2), 4);
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        for x in 0..6 {
            assert_eq!(g.mul(x, g.inv(x)), 0);
            for y in 0..6 {
                assert_eq!(g.class_of(g.conj(x, y)), g.class_of(x));
            }
        }
        let (h, emb) = g.subgroup(&[g.generator(0)]).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(emb[0], 0);
    }
}
