//! Bipartite matching saturating the left side (a system of distinct
//! representatives), by augmenting paths.

/// `options[i]` lists the right vertices allowed for left vertex `i`, in
/// preference order. Returns one right vertex per left vertex, all distinct,
/// or `None` when no such choice exists.
///
/// Left vertices are processed in index order and options in list order, so
/// the result is deterministic.
pub fn saturating_matching(options: &[Vec<usize>], n_right: usize) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; n_right];
    for left in 0..options.len() {
        let mut visited = vec![false; n_right];
        if !augment(left, options, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut assignment = vec![usize::MAX; options.len()];
    for (right, o) in owner.iter().enumerate() {
        if let Some(left) = *o {
            assignment[left] = right;
        }
    }
    Some(assignment)
}

fn augment(
    left: usize,
    options: &[Vec<usize>],
    owner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &right in &options[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        let free = match owner[right] {
            None => true,
            Some(other) => augment(other, options, owner, visited),
        };
        if free {
            owner[right] = Some(left);
            return true;
        }
    }
    false
}
