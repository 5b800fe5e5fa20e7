//! Compiles a small C program against the generated header and the static
//! library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "geohull.h"

int main(void) {
    uint32_t edges[] = {0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 0};
    GhGraph *g = NULL;
    if (gh_graph_from_edges(6, edges, 6, &g) != GH_STATUS_OK) return 1;
    uint8_t in[6] = {1, 0, 0, 1, 0, 0}, out[6];
    if (gh_closure_exact(g, in, out) != GH_STATUS_OK) return 2;
    int count = 0;
    for (int i = 0; i < 6; i++) count += out[i];
    GhOuterplanar *h = NULL;
    if (gh_sample_outerplanar(g, 7, &h) != GH_STATUS_OK) return 3;
    printf("closure=%d faces=%zu edges=%zu\n", count, gh_outerplanar_face_number(h), gh_outerplanar_edge_count(h));
    gh_outerplanar_free(h);
    if (gh_graph_from_edges(2, edges + 8, 1, &g) != GH_STATUS_VERTEX_OUT_OF_RANGE) return 4;
    printf("error=%s\n", gh_last_error());
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libgeohull_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let work = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = work.join("smoke.c");
    let exe = work.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("closure=6 faces=1 edges=6\n"), "{text}");
    assert!(text.contains("error=vertex-out-of-range:"), "{text}");
}
