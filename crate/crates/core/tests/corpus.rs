mod common;

use common::*;

#[test]
fn graph_counts_match_known_sequences() {
    // graphs and connected graphs on 1..=7 vertices up to isomorphism
    let all: Vec<usize> = (1..=7).map(|m| all_graphs(m).len()).collect();
    assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
    let connected: Vec<usize> = (1..=7)
        .map(|m| connected_corpus(m).iter().filter(|g| g.order() == m).count())
        .collect();
    assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn bell_and_stirling_counts() {
    let mut count = 0;
    for_each_set_partition(7, |_| count += 1);
    assert_eq!(count, 877);
    assert_eq!(set_partitions_with_k(8, 3).len(), 966);
    assert_eq!(set_partitions_with_k(12, 4).len(), 611_501);
}
