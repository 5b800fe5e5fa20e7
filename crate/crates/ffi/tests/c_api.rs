use std::ffi::{CStr, CString};
use std::ptr;

use geohull_ffi::*;

fn graph(n: usize, edges: &[u32]) -> *mut GhGraph {
    let mut g = ptr::null_mut();
    let status = unsafe { gh_graph_from_edges(n, edges.as_ptr(), edges.len() / 2, &mut g) };
    assert_eq!(status, GhStatus::Ok);
    g
}

fn last_error() -> String {
    let p = gh_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn c6_closure_through_the_c_abi() {
    let g = graph(6, &[0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 0]);
    unsafe {
        assert_eq!((gh_graph_vertex_count(g), gh_graph_edge_count(g)), (6, 6));
        let mut out = [0u8; 6];
        assert_eq!(gh_closure_exact(g, [1, 0, 0, 1, 0, 0].as_ptr(), out.as_mut_ptr()), GhStatus::Ok);
        assert_eq!(out, [1; 6]);
        assert_eq!(gh_closure_exact(g, [0, 0, 1, 1, 0, 0].as_ptr(), out.as_mut_ptr()), GhStatus::Ok);
        assert_eq!(out, [0, 0, 1, 1, 0, 0]);
        gh_graph_free(g);
    }
}

#[test]
fn sample_of_a_cycle_is_the_cycle() {
    let g = graph(5, &[0, 1, 1, 2, 2, 3, 3, 4, 4, 0]);
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(gh_sample_outerplanar(g, 3, &mut h), GhStatus::Ok);
        assert_eq!(gh_outerplanar_edge_count(h), 5);
        assert_eq!(gh_outerplanar_face_number(h), 1);
        let mut out = [0u8; 5];
        assert_eq!(gh_outerplanar_closure(h, [1, 0, 1, 0, 0].as_ptr(), out.as_mut_ptr()), GhStatus::Ok);
        assert_eq!(out, [1, 1, 1, 0, 0]);
        let mut approx = [0u8; 5];
        assert_eq!(
            gh_closure_approx(g, [1, 0, 1, 0, 0].as_ptr(), 4, 100.0, 1, approx.as_mut_ptr()),
            GhStatus::Ok
        );
        assert_eq!(approx, out);
        gh_outerplanar_free(h);
        gh_graph_free(g);
    }
}

#[test]
fn cores_and_jaccard() {
    let n = 40;
    let mut edges = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            edges.extend([a, b]);
        }
    }
    let g = graph(n, &edges);
    unsafe {
        let config = gh_core_config_default();
        assert_eq!((config.k, config.l, config.num_subgraphs), (10, 5, 100));
        let mut core = vec![0u8; n];
        let mut iterations = 0usize;
        assert_eq!(gh_core_exact(g, &config, core.as_mut_ptr(), &mut iterations), GhStatus::Ok);
        assert!(core.iter().all(|&b| b == 0));
        assert!(iterations >= 1);
        let small = GhCoreConfig { num_subgraphs: 5, ..config };
        let mut approx = vec![0u8; n];
        assert_eq!(gh_core_approx(g, &small, approx.as_mut_ptr(), ptr::null_mut()), GhStatus::Ok);
        let mut j = 0.0;
        assert_eq!(gh_jaccard([1, 1, 1, 0].as_ptr(), [0, 1, 1, 1].as_ptr(), 4, &mut j), GhStatus::Ok);
        assert_eq!(j, 0.5);
        gh_graph_free(g);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(gh_graph_from_edges(3, [0, 7].as_ptr(), 1, &mut g), GhStatus::VertexOutOfRange);
        assert!(last_error().starts_with("vertex-out-of-range:"));
        assert!(g.is_null());

        let path = CString::new("/nonexistent/graph.txt").unwrap();
        assert_eq!(gh_graph_read(path.as_ptr(), true, &mut g), GhStatus::Io);

        let dir = std::env::temp_dir().join(format!("gh-ffi-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("bad.txt");
        std::fs::write(&file, "1 2\n2 q\n").unwrap();
        let path = CString::new(file.to_str().unwrap()).unwrap();
        assert_eq!(gh_graph_read(path.as_ptr(), false, &mut g), GhStatus::Parse);
        assert!(last_error().contains("line 2"));
        std::fs::write(&file, "10 20\n20 30\n40 50\n").unwrap();
        assert_eq!(gh_graph_read(path.as_ptr(), true, &mut g), GhStatus::Ok);
        assert_eq!(gh_graph_vertex_count(g), 3);
        let mut label = 0;
        assert_eq!(gh_graph_label(g, 2, &mut label), GhStatus::Ok);
        assert_eq!(label, 30);
        assert_eq!(gh_graph_label(g, 3, &mut label), GhStatus::VertexOutOfRange);
        gh_graph_free(g);
        std::fs::remove_dir_all(&dir).unwrap();

        let two = graph(4, &[0, 1, 2, 3]);
        let mut h = ptr::null_mut();
        assert_eq!(gh_sample_outerplanar(two, 0, &mut h), GhStatus::NotConnected);
        let mut out = [0u8; 4];
        assert_eq!(gh_closure_exact(two, ptr::null(), out.as_mut_ptr()), GhStatus::NullPointer);
        assert_eq!(
            gh_closure_approx(ptr::null(), [0u8; 4].as_ptr(), 1, 1.0, 0, out.as_mut_ptr()),
            GhStatus::NullPointer
        );
        assert_eq!(
            gh_closure_approx(two, [0u8; 4].as_ptr(), 0, 1.0, 0, out.as_mut_ptr()),
            GhStatus::InvalidArgument
        );
        gh_graph_free(two);

        let ok = graph(2, &[0, 1]);
        let mut out = [0u8; 2];
        assert_eq!(gh_closure_exact(ok, [1, 0].as_ptr(), out.as_mut_ptr()), GhStatus::Ok);
        assert!(gh_last_error().is_null());
        gh_graph_free(ok);

        assert_eq!(gh_graph_vertex_count(ptr::null()), 0);
        gh_graph_free(ptr::null_mut());
        assert!(!CStr::from_ptr(gh_version()).to_str().unwrap().is_empty());
    }
}
