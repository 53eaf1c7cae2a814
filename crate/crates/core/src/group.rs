//! Finite groups by Cayley table, with the subgroup / character / cocycle
//! machinery the Hopf constructions need.
//!
//! Elements are dense indices 0..order-1.  Constructors in this module put
//! the identity at index 0; tables read from files may have it anywhere.

use serde::{Deserialize, Serialize};

use crate::scalar::Cyc;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(skip)]
    pub identity: usize,
    #[serde(skip)]
    pub inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Build and fully verify a group from its multiplication table.
    pub fn from_cayley_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has wrong length")));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::NotAGroup(format!("entry out of range in row {i}")));
                }
            }
        }
        // Identity: a two-sided unit.
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        // Associativity, exhaustively, with a witness on failure.
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // Inverses.
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            let gi = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))?;
            inverse[g] = gi;
        }
        Ok(FiniteGroup { order: n, table, identity, inverse })
    }

    /// Re-derive the skipped fields after deserialization.
    pub fn revalidate(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        Self::from_cayley_table(table)
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_cayley_table(vec![vec![0]]).unwrap()
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_cayley_table(table).unwrap()
    }

    /// The symmetric group on m letters (small m), identity first, then the
    /// other permutations in lexicographic order.
    pub fn symmetric(m: usize) -> (FiniteGroup, Vec<Vec<usize>>) {
        let mut perms: Vec<Vec<usize>> = vec![];
        let mut base: Vec<usize> = (0..m).collect();
        permutations(&mut base, 0, &mut perms);
        perms.sort();
        // identity is lexicographically first already
        let n = perms.len();
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let mut table = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                // (p*q)(x) = p(q(x)): apply q first, then p.
                let prod: Vec<usize> = (0..m).map(|x| perms[i][perms[j][x]]).collect();
                table[i][j] = index_of(&prod);
            }
        }
        (FiniteGroup::from_cayley_table(table).unwrap(), perms)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conj(&self, g: usize, a: usize) -> usize {
        // g a g^-1
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let mut base = if k < 0 { self.inv(g) } else { g };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| num::integer::lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Direct product, elements indexed (a, b) -> a*|B| + b.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let trivial_action = vec![(0..other.order).collect::<Vec<_>>(); self.order];
        self.semidirect_product(other, &trivial_action).unwrap()
    }

    /// Semidirect product Q x| A where `self` = Q acts on A through the
    /// permutations `action[q]`.  Elements are (q, a) -> q*|A| + a, and the
    /// convention is chosen so that (q,1)(1,a)(q,1)^-1 = (1, q.a):
    /// (q,a)(q',a') = (qq', (q'^-1 . a) a').
    pub fn semidirect_product(
        &self,
        a_grp: &FiniteGroup,
        action: &[Vec<usize>],
    ) -> Result<FiniteGroup> {
        let q_ord = self.order;
        let a_ord = a_grp.order;
        if action.len() != q_ord {
            return Err(Error::Invalid("action table must have one row per acting element".into()));
        }
        for (q, perm) in action.iter().enumerate() {
            if !is_automorphism(a_grp, perm) {
                return Err(Error::Invalid(format!("action of element {q} is not an automorphism")));
            }
        }
        // Homomorphism property: action[q1*q2] = action[q1] o action[q2].
        for q1 in 0..q_ord {
            for q2 in 0..q_ord {
                let q12 = self.mul(q1, q2);
                for x in 0..a_ord {
                    if action[q12][x] != action[q1][action[q2][x]] {
                        return Err(Error::Invalid(format!(
                            "action is not a homomorphism at ({q1},{q2})"
                        )));
                    }
                }
            }
        }
        let order = q_ord * a_ord;
        let mut table = vec![vec![0usize; order]; order];
        for q in 0..q_ord {
            for x in 0..a_ord {
                let g = q * a_ord + x;
                for q2 in 0..q_ord {
                    for y in 0..a_ord {
                        let h = q2 * a_ord + y;
                        let moved = action[self.inv(q2)][x];
                        table[g][h] = self.mul(q, q2) * a_ord + a_grp.mul(moved, y);
                    }
                }
            }
        }
        FiniteGroup::from_cayley_table(table)
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            head += 1;
            for &s in gens {
                for h in [self.mul(g, s), self.mul(g, self.inv(s))] {
                    if !seen[h] {
                        seen[h] = true;
                        queue.push(h);
                    }
                }
            }
        }
        let mut elements: Vec<usize> = (0..self.order).filter(|&g| seen[g]).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// Every subgroup, by closure of incremental generator sets.  Fine for
    /// the orders this crate works at (<= a few hundred).
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: Vec<Subgroup> = vec![self.subgroup_generated(&[])];
        let mut frontier = found.clone();
        while let Some(h) = frontier.pop() {
            for g in 0..self.order {
                if h.elements.contains(&g) {
                    continue;
                }
                let mut gens = h.elements.clone();
                gens.push(g);
                let bigger = self.subgroup_generated(&gens);
                if !found.contains(&bigger) {
                    found.push(bigger.clone());
                    frontier.push(bigger);
                }
            }
        }
        found.sort_by_key(|s| (s.elements.len(), s.elements.clone()));
        found
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup { elements: (0..self.order).collect() }
    }

    pub fn centralizer(&self, g: usize, within: &Subgroup) -> Subgroup {
        let elements = within
            .elements
            .iter()
            .copied()
            .filter(|&m| self.mul(m, g) == self.mul(g, m))
            .collect();
        Subgroup { elements }
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let elements = (0..self.order)
            .filter(|&g| {
                h.elements.iter().all(|&x| h.elements.binary_search(&self.conj(g, x)).is_ok())
            })
            .collect();
        Subgroup { elements }
    }

    pub fn commutator_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut gens = Vec::new();
        for &a in &h.elements {
            for &b in &h.elements {
                // [a,b] = a b a^-1 b^-1
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                gens.push(c);
            }
        }
        // Intersect with closure inside H (commutators of H lie in H anyway).
        self.subgroup_generated(&gens)
    }

    pub fn is_perfect(&self, h: &Subgroup) -> bool {
        self.commutator_subgroup(h) == *h
    }

    pub fn is_self_normalizing(&self, h: &Subgroup) -> bool {
        self.normalizer(h) == *h
    }

    /// Double cosets HgH, each sorted, ordered by minimal element.
    pub fn double_cosets(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order];
        let mut blocks = Vec::new();
        for g in 0..self.order {
            if assigned[g] {
                continue;
            }
            let mut block: Vec<usize> = Vec::new();
            for &a in &h.elements {
                for &b in &h.elements {
                    let x = self.mul(self.mul(a, g), b);
                    if !assigned[x] {
                        assigned[x] = true;
                        block.push(x);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    /// K_g = H n gHg^-1 with the two embeddings into H:
    /// theta1(a) = g^-1 a g and theta2(a) = a.
    pub fn stabilizer_data(&self, h: &Subgroup, g: usize) -> (Subgroup, Vec<usize>, Vec<usize>) {
        let elements: Vec<usize> = h
            .elements
            .iter()
            .copied()
            .filter(|&a| {
                let moved = self.conj(self.inv(g), a); // g^-1 a g
                h.elements.binary_search(&moved).is_ok()
            })
            .collect();
        let k = Subgroup { elements };
        let theta1: Vec<usize> = k.elements.iter().map(|&a| self.conj(self.inv(g), a)).collect();
        let theta2: Vec<usize> = k.elements.clone();
        (k, theta1, theta2)
    }

    /// Stand-alone group structure on a subgroup: returns the small group
    /// (identity at index 0, the rest in increasing parent order) plus the
    /// map small index -> parent element.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let mut elems = h.elements.clone();
        elems.retain(|&x| x != self.identity);
        let mut map = vec![self.identity];
        map.extend(elems);
        let pos = |x: usize| map.iter().position(|&y| y == x).unwrap();
        let k = map.len();
        let table = (0..k)
            .map(|i| (0..k).map(|j| pos(self.mul(map[i], map[j]))).collect())
            .collect();
        (FiniteGroup::from_cayley_table(table).unwrap(), map)
    }

    /// All |A| characters of an abelian group, with values in Q(zeta_n);
    /// n must be a multiple of the exponent.  The trivial character comes
    /// first; the rest are ordered by their value tables.
    pub fn character_group(&self, n: u32) -> Result<Vec<Character>> {
        if !self.is_abelian() {
            return Err(Error::Invalid("character_group requires an abelian group".into()));
        }
        let expo = self.exponent();
        if n as usize % expo != 0 {
            return Err(Error::Invalid(format!(
                "conductor {n} does not contain the roots of unity of order {expo}"
            )));
        }
        // Greedy generating set.
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.subgroup_generated(&[]);
        for g in 0..self.order {
            if span.elements.binary_search(&g).is_err() {
                gens.push(g);
                span = self.subgroup_generated(&gens);
            }
        }
        if gens.is_empty() {
            return Ok(vec![Character { values: vec![Cyc::one(n)] }]);
        }
        let orders: Vec<usize> = gens.iter().map(|&g| self.element_order(g)).collect();
        let mut chars: Vec<Character> = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            if let Some(values) = self.try_extend_character(&gens, &orders, &choice, n) {
                let ch = Character { values };
                if !chars.contains(&ch) {
                    chars.push(ch);
                }
            }
            // Increment the mixed-radix counter.
            let mut i = 0;
            loop {
                if i == gens.len() {
                    // done
                    if chars.len() != self.order {
                        return Err(Error::Invalid(format!(
                            "character count {} does not match group order {}",
                            chars.len(),
                            self.order
                        )));
                    }
                    chars.sort_by_key(|c| {
                        (0..self.order)
                            .map(|g| if c.values[g].is_one() { 0u8 } else { 1u8 })
                            .collect::<Vec<_>>()
                    });
                    // trivial character first
                    let triv = chars.iter().position(|c| c.values.iter().all(|v| v.is_one())).unwrap();
                    chars.swap(0, triv);
                    return Ok(chars);
                }
                choice[i] += 1;
                if choice[i] < orders[i] {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    fn try_extend_character(
        &self,
        gens: &[usize],
        orders: &[usize],
        choice: &[usize],
        n: u32,
    ) -> Option<Vec<Cyc>> {
        let mut values: Vec<Option<Cyc>> = vec![None; self.order];
        values[self.identity] = Some(Cyc::one(n));
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            head += 1;
            let vg = values[g].clone().unwrap();
            for (i, &s) in gens.iter().enumerate() {
                let exp = (n as usize / orders[i]) * choice[i];
                let vs = Cyc::root_of_unity(exp as i64, n);
                let gs = self.mul(g, s);
                let val = vg.mul(&vs);
                match &values[gs] {
                    None => {
                        values[gs] = Some(val);
                        queue.push(gs);
                    }
                    Some(existing) => {
                        if *existing != val {
                            return None;
                        }
                    }
                }
            }
        }
        if values.iter().any(|v| v.is_none()) {
            return None; // generators did not generate (cannot happen)
        }
        Some(values.into_iter().map(|v| v.unwrap()).collect())
    }

    /// The character group as a FiniteGroup (pointwise product), together
    /// with the character list in index order.  Trivial character = index 0.
    pub fn dual_group(&self, n: u32) -> Result<(FiniteGroup, Vec<Character>)> {
        let chars = self.character_group(n)?;
        let k = chars.len();
        let index_of = |c: &Character| chars.iter().position(|d| d == c).unwrap();
        let mut table = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                let prod = Character {
                    values: (0..self.order)
                        .map(|g| chars[i].values[g].mul(&chars[j].values[g]))
                        .collect(),
                };
                table[i][j] = index_of(&prod);
            }
        }
        Ok((FiniteGroup::from_cayley_table(table)?, chars))
    }
}

fn permutations(base: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == base.len() {
        out.push(base.clone());
        return;
    }
    for i in k..base.len() {
        base.swap(k, i);
        permutations(base, k + 1, out);
        base.swap(k, i);
    }
}

fn is_automorphism(g: &FiniteGroup, perm: &[usize]) -> bool {
    if perm.len() != g.order {
        return false;
    }
    let mut seen = vec![false; g.order];
    for &x in perm {
        if x >= g.order || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    if perm[g.identity] != g.identity {
        return false;
    }
    (0..g.order).all(|a| (0..g.order).all(|b| perm[g.mul(a, b)] == g.mul(perm[a], perm[b])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    /// Sorted element indices in the parent group.
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

/// A character of an abelian group, tabulated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    /// values[g] = chi(g), a root of unity in Q(zeta_n).
    pub values: Vec<Cyc>,
}

impl Character {
    pub fn eval(&self, g: usize) -> &Cyc {
        &self.values[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    pub fn verify(&self, g: &FiniteGroup) -> bool {
        (0..g.order).all(|a| {
            (0..g.order).all(|b| self.values[g.mul(a, b)] == self.values[a].mul(&self.values[b]))
        })
    }
}

/// A normalized 2-cocycle on a group, valued in roots of unity.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCocycle {
    /// values[g][h] = c(g, h)
    pub values: Vec<Vec<Cyc>>,
}

impl TwoCocycle {
    pub fn trivial(order: usize, n: u32) -> Self {
        TwoCocycle { values: vec![vec![Cyc::one(n); order]; order] }
    }

    pub fn eval(&self, g: usize, h: usize) -> &Cyc {
        &self.values[g][h]
    }

    /// Check the cocycle identity c(g,h)c(gh,l) = c(h,l)c(g,hl) on all
    /// triples and normalization at the identity.
    pub fn verify(&self, grp: &FiniteGroup) -> Result<()> {
        let n = grp.order;
        for g in 0..n {
            if !self.values[grp.identity][g].is_one() || !self.values[g][grp.identity].is_one() {
                return Err(Error::VerificationFailed(format!(
                    "cocycle not normalized at element {g}"
                )));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for l in 0..n {
                    let lhs = self.values[g][h].mul(&self.values[grp.mul(g, h)][l]);
                    let rhs = self.values[h][l].mul(&self.values[g][grp.mul(h, l)]);
                    if lhs != rhs {
                        return Err(Error::VerificationFailed(format!(
                            "cocycle identity fails at ({g},{h},{l})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Nondegeneracy: for every g != 1, the map m -> c(m,g)/c(g,m) is a
    /// nontrivial homomorphism on the centralizer of g.
    pub fn is_nondegenerate(&self, grp: &FiniteGroup) -> bool {
        let full = grp.full_subgroup();
        for g in 0..grp.order {
            if g == grp.identity {
                continue;
            }
            let cent = grp.centralizer(g, &full);
            let nontrivial = cent.elements.iter().any(|&m| {
                let ratio = self.values[m][g].mul(&self.values[g][m].inv().expect("root of unity"));
                !ratio.is_one()
            });
            if !nontrivial {
                return false;
            }
        }
        true
    }
}

/// A bimultiplicative form on an abelian group, valued in roots of unity.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    /// values[g][h] = F(g, h)
    pub values: Vec<Vec<Cyc>>,
}

impl BilinearForm {
    pub fn eval(&self, g: usize, h: usize) -> &Cyc {
        &self.values[g][h]
    }

    pub fn verify_bimultiplicative(&self, grp: &FiniteGroup) -> Result<()> {
        for a in 0..grp.order {
            for b in 0..grp.order {
                for c in 0..grp.order {
                    let left = self.values[grp.mul(a, b)][c].clone();
                    if left != self.values[a][c].mul(&self.values[b][c]) {
                        return Err(Error::VerificationFailed(format!(
                            "not multiplicative in the first slot at ({a},{b},{c})"
                        )));
                    }
                    let right = self.values[a][grp.mul(b, c)].clone();
                    if right != self.values[a][b].mul(&self.values[a][c]) {
                        return Err(Error::VerificationFailed(format!(
                            "not multiplicative in the second slot at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_skew_symmetric(&self, grp: &FiniteGroup) -> bool {
        (0..grp.order).all(|a| {
            (0..grp.order).all(|b| {
                self.values[a][b].mul(&self.values[b][a]) == Cyc::one(self.values[a][b].conductor())
            })
        })
    }

    /// g -> F(g, .) injective into characters.
    pub fn is_nondegenerate(&self, grp: &FiniteGroup) -> bool {
        for g in 0..grp.order {
            if g == grp.identity {
                continue;
            }
            if (0..grp.order).all(|h| self.values[g][h].is_one()) {
                return false;
            }
        }
        // Injectivity: F(g,.) = F(g',.) => F(g g'^-1, .) trivial, so the
        // identity-kernel test above is the whole check.
        true
    }

    /// Any bimultiplicative form is a 2-cocycle (the identity telescopes).
    pub fn as_cocycle(&self, grp: &FiniteGroup) -> Result<TwoCocycle> {
        let c = TwoCocycle { values: self.values.clone() };
        c.verify(grp)?;
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_validation() {
        assert_eq!(FiniteGroup::trivial().order, 1);
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(z4.exponent(), 4);
        assert!(z4.is_abelian());
        // A Latin square that is not associative (order 5, loop not group).
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        match FiniteGroup::from_cayley_table(bad) {
            Err(Error::NotAGroup(msg)) => assert!(msg.contains("associativity")),
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn symmetric_group() {
        let (s3, _) = FiniteGroup::symmetric(3);
        assert_eq!(s3.order, 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.exponent(), 6);
        // A3 is the unique subgroup of order 3.
        let subs = s3.all_subgroups();
        assert_eq!(subs.iter().filter(|s| s.order() == 3).count(), 1);
        assert_eq!(subs.iter().filter(|s| s.order() == 2).count(), 3);
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap();
        assert!(!s3.is_self_normalizing(a3)); // normal
        assert!(!s3.is_perfect(a3)); // abelian
        let t = subs.iter().find(|s| s.order() == 2).unwrap();
        assert!(s3.is_self_normalizing(t));
    }

    #[test]
    fn semidirect_conventions() {
        // Z2 acting on Z3 by inversion gives S3.
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let action = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let g = z2.semidirect_product(&z3, &action).unwrap();
        assert_eq!(g.order, 6);
        assert!(!g.is_abelian());
        // Convention: (q,1)(1,a)(q,1)^-1 = (1, q.a).
        let q = 1 * z3.order + 0; // (q, 1)
        let a = 0 * z3.order + 1; // (1, a)
        let lhs = g.mul(g.mul(q, a), g.inv(q));
        assert_eq!(lhs, 0 * z3.order + 2); // (1, a^-1)
        // Non-homomorphic action is rejected.
        let bad = vec![vec![0, 1, 2], vec![0, 1, 2]];
        // z4 acting with period-2 pattern that is not a homomorphism:
        let z4 = FiniteGroup::cyclic(4);
        let bad4 = vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 1, 2], vec![0, 1, 2]];
        assert!(z4.semidirect_product(&z3, &bad4).is_err());
        let _ = bad;
    }

    #[test]
    fn characters_of_abelian_groups() {
        let triv = FiniteGroup::trivial();
        assert_eq!(triv.character_group(1).unwrap().len(), 1);

        let z4 = FiniteGroup::cyclic(4);
        let chars = z4.character_group(4).unwrap();
        assert_eq!(chars.len(), 4);
        for c in &chars {
            assert!(c.verify(&z4));
            assert!(c.values[1].is_zero() || c.values[1].multiplicative_order().unwrap() <= 4);
        }

        let z6 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3));
        let chars = z6.character_group(6).unwrap();
        assert_eq!(chars.len(), 6);
        // Orthogonality: sum_a chi(a) psi(a)^-1 = |A| [chi = psi].
        for x in &chars {
            for y in &chars {
                let mut acc = Cyc::zero(6);
                for a in 0..z6.order {
                    acc = acc.add(&x.values[a].mul(&y.values[a].inv().unwrap()));
                }
                if x == y {
                    assert_eq!(acc, Cyc::from_int(6, 6));
                } else {
                    assert!(acc.is_zero());
                }
            }
        }
        // Non-abelian input rejected.
        let (s3, _) = FiniteGroup::symmetric(3);
        assert!(s3.character_group(6).is_err());
    }

    #[test]
    fn dual_group_structure() {
        let a = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(3));
        let (dual, chars) = a.dual_group(6).unwrap();
        assert_eq!(dual.order, 6);
        assert_eq!(dual.identity, 0);
        assert!(chars[0].is_trivial());
        assert!(dual.is_abelian());
        assert_eq!(dual.exponent(), 6);
    }

    #[test]
    fn double_cosets_and_stabilizers() {
        let (s3, _) = FiniteGroup::symmetric(3);
        let subs = s3.all_subgroups();
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap();
        // Normal subgroup: double cosets = cosets.
        let dc = s3.double_cosets(a3);
        assert_eq!(dc.len(), 2);
        assert!(dc.iter().all(|b| b.len() == 3));
        // H = G: single block.
        let all = s3.full_subgroup();
        assert_eq!(s3.double_cosets(&all).len(), 1);
        // |Z| * |K_g| = |H|^2 for all blocks of all subgroups.
        for h in &subs {
            for block in s3.double_cosets(h) {
                let g = block[0];
                let (k, th1, th2) = s3.stabilizer_data(h, g);
                assert_eq!(block.len() * k.order(), h.order() * h.order());
                // theta images in H, homomorphisms
                for (i, &a) in k.elements.iter().enumerate() {
                    assert!(h.contains(th1[i]));
                    assert!(h.contains(th2[i]));
                    let _ = a;
                }
                for (i, &a) in k.elements.iter().enumerate() {
                    for (j, &b) in k.elements.iter().enumerate() {
                        let ab = s3.mul(a, b);
                        let pos = k.elements.binary_search(&ab).unwrap();
                        assert_eq!(th1[pos], s3.mul(th1[i], th1[j]));
                        assert_eq!(th2[pos], s3.mul(th2[i], th2[j]));
                    }
                }
            }
        }
    }

    #[test]
    fn symplectic_cocycle_on_p3() {
        // (Z/3)^2 with c((x,y),(x',y')) = zeta_3^(x y').
        let h = FiniteGroup::cyclic(3).direct_product(&FiniteGroup::cyclic(3));
        let n = 3;
        let coords = |g: usize| (g / 3, g % 3);
        let values: Vec<Vec<Cyc>> = (0..9)
            .map(|g| {
                (0..9)
                    .map(|k| {
                        let (x, _y) = coords(g);
                        let (_x2, y2) = coords(k);
                        Cyc::root_of_unity((x * y2) as i64, n)
                    })
                    .collect()
            })
            .collect();
        let form = BilinearForm { values };
        form.verify_bimultiplicative(&h).unwrap();
        let c = form.as_cocycle(&h).unwrap();
        assert!(c.is_nondegenerate(&h));
        // Ratio c(a,b)/c(b,a) is the alternating pairing zeta^(x y' - y x').
        for g in 0..9 {
            for k in 0..9 {
                let (x, y) = coords(g);
                let (x2, y2) = coords(k);
                let ratio = c.eval(g, k).mul(&c.eval(k, g).inv().unwrap());
                let expect = Cyc::root_of_unity(x as i64 * y2 as i64 - y as i64 * x2 as i64, n);
                assert_eq!(ratio, expect);
            }
        }
        // Trivial cocycle on a nontrivial group is degenerate.
        let t = TwoCocycle::trivial(9, n);
        t.verify(&h).unwrap();
        assert!(!t.is_nondegenerate(&h));
    }
}
