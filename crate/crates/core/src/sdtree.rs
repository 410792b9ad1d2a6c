//! Explicit divide-and-conquer trees with S/D-labeled interior nodes.
//!
//! This is the brute-force oracle: trees are materialized node by node and
//! counted by traversal, with no shortcut through any of the closed forms
//! they are used to check.

use crate::error::{Error, Result};

/// Largest `n` accepted by [`build_dnc_tree`] (the tree has `2n - 1` nodes).
pub const ORACLE_MAX: u64 = 1 << 22;

/// Interior-node label: children have the Same or Different leaf counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    S,
    D,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    leaf_count: u64,
    depth: u32,
    // u32::MAX marks a leaf; interior nodes always have both children.
    left: u32,
    right: u32,
}

const NO_CHILD: u32 = u32::MAX;

impl Node {
    fn is_leaf(&self) -> bool {
        self.left == NO_CHILD
    }
}

/// A full binary divide-and-conquer tree, stored as a preorder arena.
#[derive(Debug, Clone)]
pub struct SdTree {
    nodes: Vec<Node>,
}

/// Per-depth D-node counts `lambda_i`, indexed by depth `i in [0, k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    pub d_counts: Vec<u64>,
}

impl SdTree {
    /// Number of leaves under the root.
    pub fn leaf_count(&self) -> u64 {
        self.nodes[0].leaf_count
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn label(&self, node: &Node) -> Option<Label> {
        if node.is_leaf() {
            return None;
        }
        let l = self.nodes[node.left as usize].leaf_count;
        let r = self.nodes[node.right as usize].leaf_count;
        Some(if l == r { Label::S } else { Label::D })
    }
}

/// Builds the divide-and-conquer tree on `n` leaves.
///
/// Split convention: the left child takes `ceil(m/2)` of its parent's `m`
/// leaves, the right child `floor(m/2)`. The tree is unique up to
/// isomorphism, so the convention only pins down traversal order.
pub fn build_dnc_tree(n: u64) -> Result<SdTree> {
    if n == 0 {
        return Err(Error::Domain("a tree needs at least one leaf".into()));
    }
    if n > ORACLE_MAX {
        return Err(Error::Range(format!(
            "n = {n} exceeds the tree-oracle bound 2^22 = {ORACLE_MAX}"
        )));
    }
    let mut nodes = Vec::with_capacity((2 * n - 1) as usize);
    build_into(&mut nodes, n, 0);
    Ok(SdTree { nodes })
}

fn build_into(nodes: &mut Vec<Node>, m: u64, depth: u32) -> u32 {
    let id = nodes.len() as u32;
    nodes.push(Node {
        leaf_count: m,
        depth,
        left: NO_CHILD,
        right: NO_CHILD,
    });
    if m > 1 {
        let left = build_into(nodes, m - m / 2, depth + 1);
        let right = build_into(nodes, m / 2, depth + 1);
        nodes[id as usize].left = left;
        nodes[id as usize].right = right;
    }
    id
}

/// Counts interior labels by traversal: `(s_count, d_count)`.
pub fn count_labels(tree: &SdTree) -> (u64, u64) {
    let mut s = 0;
    let mut d = 0;
    for node in &tree.nodes {
        match tree.label(node) {
            Some(Label::S) => s += 1,
            Some(Label::D) => d += 1,
            None => {}
        }
    }
    (s, d)
}

/// Counts interior D-nodes per depth.
///
/// The profile has one entry per depth `i in [0, k-1]` with
/// `k = floor(log2 n)`; in a divide-and-conquer tree no D-node can sit
/// deeper, and the traversal would surface one if the invariant broke
/// (the profile simply grows past length `k`).
pub fn level_d_counts(tree: &SdTree) -> LevelProfile {
    let k = tree.leaf_count().ilog2() as usize;
    let mut d_counts = vec![0u64; k];
    for node in &tree.nodes {
        if tree.label(node) == Some(Label::D) {
            let depth = node.depth as usize;
            if depth >= d_counts.len() {
                d_counts.resize(depth + 1, 0);
            }
            d_counts[depth] += 1;
        }
    }
    LevelProfile { d_counts }
}

/// Renders the tree as deterministic DOT text: preorder node statements
/// (interior nodes labeled "leaf_count S|D", leaves "1"), then one edge
/// per parent-child link with the left edge first.
pub fn export_dot(tree: &SdTree) -> String {
    let mut out = String::from("digraph sdtree {\n");
    for (id, node) in tree.nodes.iter().enumerate() {
        match tree.label(node) {
            Some(Label::S) => {
                out.push_str(&format!("  n{id} [label=\"{} S\"];\n", node.leaf_count))
            }
            Some(Label::D) => {
                out.push_str(&format!("  n{id} [label=\"{} D\"];\n", node.leaf_count))
            }
            None => out.push_str(&format!("  n{id} [label=\"{}\"];\n", node.leaf_count)),
        }
    }
    for (id, node) in tree.nodes.iter().enumerate() {
        if !node.is_leaf() {
            out.push_str(&format!("  n{id} -> n{};\n", node.left));
            out.push_str(&format!("  n{id} -> n{};\n", node.right));
        }
    }
    out.push_str("}\n");
    out
}

/// Checks the defining property at every interior node: children's leaf
/// counts differ by at most 1 and sum to the parent's.
pub fn is_divide_and_conquer(tree: &SdTree) -> bool {
    tree.nodes.iter().all(|node| {
        if node.is_leaf() {
            node.leaf_count == 1
        } else {
            let l = tree.nodes[node.left as usize].leaf_count;
            let r = tree.nodes[node.right as usize].leaf_count;
            l + r == node.leaf_count && l.abs_diff(r) <= 1
        }
    })
}
