use super::ExplorerError;

/// Merges a partition with at least two blocks into two blocks whose smaller
/// side is at least as large as the smallest input block.
///
/// The smallest block starts side A and everything else side B; then blocks
/// move from B to A, smallest first, while that makes the smaller side
/// larger. Blocks keep their input order within each side.
pub fn merge_parts<T: Clone>(parts: &[Vec<T>]) -> Result<(Vec<T>, Vec<T>), ExplorerError> {
    if parts.len() < 2 {
        return Err(ExplorerError::FewerThanTwoBlocks(parts.len()));
    }
    if let Some(i) = parts.iter().position(Vec::is_empty) {
        return Err(ExplorerError::EmptyBlock(i));
    }
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by_key(|&i| (parts[i].len(), i));
    let total: usize = parts.iter().map(Vec::len).sum();
    let mut in_a = vec![false; parts.len()];
    in_a[order[0]] = true;
    let mut a = parts[order[0]].len();
    let mut blocks_in_b = parts.len() - 1;
    for &i in &order[1..] {
        let size = parts[i].len();
        if blocks_in_b > 1 && (a + size).min(total - a - size) > a.min(total - a) {
            in_a[i] = true;
            a += size;
            blocks_in_b -= 1;
        }
    }
    let side = |want: bool| -> Vec<T> {
        parts.iter().zip(&in_a).filter(|(_, &x)| x == want).flat_map(|(p, _)| p.iter().cloned()).collect()
    };
    Ok((side(true), side(false)))
}
