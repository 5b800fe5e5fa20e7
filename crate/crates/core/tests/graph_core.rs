mod common;

use geohull::bfs::{bfs_distances, INFINITY};
use geohull::graph::{degree_distribution, largest_component, parse_edge_list, Graph};
use geohull::random::erdos_renyi;
use geohull::vertex_set::VertexSet;

#[test]
fn parses_comments_and_pairs() {
    let g = parse_edge_list("# c\n0 1\n1 2".as_bytes()).unwrap();
    assert_eq!((g.n(), g.m()), (3, 2));
    let g = parse_edge_list("0 1\n1 0\n1 1".as_bytes()).unwrap();
    assert_eq!((g.n(), g.m()), (2, 1));
}

#[test]
fn malformed_line_reports_line_number() {
    let err = parse_edge_list("0 1\n# ok\n2 x\n".as_bytes()).unwrap_err();
    assert_eq!(err.kind(), "parse");
    assert!(err.to_string().starts_with("line 3:"), "{err}");
}

#[test]
fn serialize_then_parse_is_stable() {
    let g = erdos_renyi(60, 0.1, 1);
    let mut first = Vec::new();
    g.write_edge_list(&mut first).unwrap();
    let again = parse_edge_list(first.as_slice()).unwrap();
    let mut second = Vec::new();
    again.write_edge_list(&mut second).unwrap();
    assert_eq!(first, second);
}

#[test]
fn largest_component_picks_bigger_piece() {
    // Triangle {0,1,2} and a path on five vertices {3..7}.
    let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7)]);
    let big = largest_component(&g);
    assert_eq!(big.n(), 5);
    assert_eq!(big.labels(), &[3, 4, 5, 6, 7]);
    let connected = Graph::from_edges(3, [(0, 1), (1, 2)]);
    assert_eq!(largest_component(&connected), connected);
    assert_eq!(largest_component(&Graph::empty()).n(), 0);
}

#[test]
fn bfs_agrees_with_floyd_warshall() {
    for seed in 0..20 {
        let g = erdos_renyi(50, 0.06, seed);
        let d = common::floyd_warshall(&g);
        for (s, row) in d.iter().enumerate() {
            let field = bfs_distances(&g, s);
            for (t, &dt) in row.iter().enumerate() {
                let expect = if dt == common::INF { INFINITY } else { dt };
                assert_eq!(field.dist[t], expect, "seed {seed} {s}->{t}");
            }
        }
    }
}

#[test]
fn bfs_distances_differ_by_at_most_one_across_edges() {
    let g = erdos_renyi(200, 0.02, 5);
    let field = bfs_distances(&g, 0);
    for (a, b) in g.edges() {
        let (da, db) = (field.dist[a], field.dist[b]);
        if da != INFINITY && db != INFINITY {
            assert!(da.abs_diff(db) <= 1);
        }
    }
}

#[test]
fn degree_histograms() {
    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
    let hist = degree_distribution(&star, &VertexSet::full(4));
    assert_eq!(hist.into_iter().collect::<Vec<_>>(), vec![(1, 3), (3, 1)]);
    assert!(degree_distribution(&star, &VertexSet::new(4)).is_empty());

    let g = erdos_renyi(100, 0.05, 2);
    let set = VertexSet::from_iter(100, (0..100).step_by(3));
    let hist = degree_distribution(&g, &set);
    assert_eq!(hist.values().sum::<usize>(), set.len());
    for (&deg, &count) in &hist {
        assert_eq!(count, set.iter().filter(|&v| g.degree(v) == deg).count());
    }
}
