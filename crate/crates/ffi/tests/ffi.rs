use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use phicover_ffi::*;

const INSTANCE_D: &str = r#"{"trees":[
  {"vertices":[[0,0],[10,0],[10,10],[0,10]],"edges":[[0,1],[1,2],[2,3]]},
  {"vertices":[[5,5]],"edges":[]},
  {"vertices":[[-2,5],[2,5]],"edges":[[0,1]]}]}"#;

fn last_error() -> String {
    unsafe { CStr::from_ptr(pc_last_error()) }.to_string_lossy().into_owned()
}

fn load(json: &str) -> *mut PcInstance {
    let text = CString::new(json).unwrap();
    let mut inst = ptr::null_mut();
    assert_eq!(unsafe { pc_instance_from_json(text.as_ptr(), &mut inst) }, PcStatus::Ok);
    inst
}

#[test]
fn cover_round_trip() {
    let inst = load(INSTANCE_D);
    unsafe {
        assert_eq!((pc_instance_tree_count(inst), pc_instance_vertex_count(inst)), (3, 7));
        assert_eq!(pc_instance_validate(inst), PcStatus::Ok);
        for (phi, algo) in [(PC_PHI_HULL, PC_ALGO_FAST), (PC_PHI_BOX, PC_ALGO_FAST), (PC_PHI_HULL, PC_ALGO_NAIVE)] {
            let mut cover = ptr::null_mut();
            assert_eq!(pc_cover_compute(inst, phi, algo, 4, &mut cover), PcStatus::Ok);
            assert_eq!(pc_cover_region_count(cover), 1);
            let mut region = usize::MAX;
            assert_eq!(pc_cover_region_of(cover, 1, &mut region), PcStatus::Ok);
            assert_eq!(region, 0);
            assert_eq!(pc_cover_region_of(cover, 9, &mut region), PcStatus::OutOfRange);
            let mut json = ptr::null_mut();
            assert_eq!(pc_cover_to_json(cover, &mut json), PcStatus::Ok);
            assert!(CStr::from_ptr(json).to_str().unwrap().contains("\"membership\":[[0,1,2]]"));
            pc_string_free(json);
            pc_cover_free(cover);
        }
        let mut stats = PcHullStats::default();
        assert_eq!(pc_hull_stats(inst, &mut stats), PcStatus::Ok);
        assert_eq!(stats.merges, 1);
        pc_instance_free(inst);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut inst = ptr::null_mut();
        let bad = CString::new("{\"trees\": [").unwrap();
        assert_eq!(pc_instance_from_json(bad.as_ptr(), &mut inst), PcStatus::Parse);
        assert!(last_error().contains("syntax error"));
        assert!(inst.is_null());
        assert_eq!(pc_instance_from_json(ptr::null(), &mut inst), PcStatus::NullArgument);

        let crossing = load(
            r#"{"trees":[{"vertices":[[0,0],[2,2]],"edges":[[0,1]]},{"vertices":[[0,2],[2,0]],"edges":[[0,1]]}]}"#,
        );
        assert_eq!(pc_instance_validate(crossing), PcStatus::Invalid);
        assert!(last_error().contains("cross at (1,1)"));
        let mut cover = ptr::null_mut();
        assert_eq!(pc_cover_compute(crossing, PC_PHI_HULL, PC_ALGO_FAST, 0, &mut cover), PcStatus::Invalid);
        pc_instance_free(crossing);

        let d = load(INSTANCE_D);
        assert_eq!(pc_cover_compute(d, PC_PHI_MINCIRCLE, PC_ALGO_FAST, 0, &mut cover), PcStatus::Unsupported);
        assert_eq!(pc_cover_compute(d, 9, PC_ALGO_FAST, 0, &mut cover), PcStatus::Unsupported);
        assert_eq!(pc_cover_compute(d, PC_PHI_MINCIRCLE, PC_ALGO_NAIVE, 0, &mut cover), PcStatus::Ok);
        assert_eq!(last_error(), "");
        pc_cover_free(cover);
        pc_instance_free(d);
        assert_eq!(pc_instance_tree_count(ptr::null()), 0);
        pc_instance_free(ptr::null_mut());
    }
}

#[test]
fn generated_instances_serialize() {
    unsafe {
        let mut inst = ptr::null_mut();
        assert_eq!(pc_instance_generate(PC_KIND_NESTED, 5, 8, 1, &mut inst), PcStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(pc_instance_to_json(inst, &mut json), PcStatus::Ok);
        let again = load(CStr::from_ptr(json).to_str().unwrap());
        assert_eq!(pc_instance_vertex_count(again), pc_instance_vertex_count(inst));
        pc_string_free(json);
        pc_instance_free(again);
        pc_instance_free(inst);
        assert_eq!(pc_instance_generate(42, 5, 8, 1, &mut inst), PcStatus::Unsupported);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/phicover.h")).unwrap();
    for name in [
        "pc_last_error",
        "pc_string_free",
        "pc_instance_from_json",
        "pc_instance_generate",
        "pc_instance_to_json",
        "pc_instance_free",
        "pc_instance_validate",
        "pc_cover_compute",
        "pc_cover_region_count",
        "pc_cover_region_of",
        "pc_cover_to_json",
        "pc_cover_free",
        "pc_hull_stats",
        "typedef struct PcInstance PcInstance;",
        "PC_STATUS_INVALID = 4",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "phicover.h"

int main(void) {
    const char *json = "{\"trees\":[{\"vertices\":[[0,0],[4,2]],\"edges\":[[0,1]]},"
                       "{\"vertices\":[[3,-1],[5,1]],\"edges\":[[0,1]]},"
                       "{\"vertices\":[[10,10],[11,12]],\"edges\":[[0,1]]}]}";
    PcInstance *inst = NULL;
    PcCover *cover = NULL;
    if (pc_instance_from_json(json, &inst) != PC_STATUS_OK) return 10;
    if (pc_cover_compute(inst, PC_PHI_BOX, PC_ALGO_FAST, 0, &cover) != PC_STATUS_OK) return 11;
    size_t region = 9;
    if (pc_cover_region_of(cover, 2, &region) != PC_STATUS_OK) return 12;
    printf("regions %zu tree2 %zu\n", pc_cover_region_count(cover), region);
    if (pc_instance_from_json("[", &inst) != PC_STATUS_PARSE || strlen(pc_last_error()) == 0) return 13;
    pc_cover_free(cover);
    pc_instance_free(inst);
    return 0;
}
"#;

/// Directory holding the built libraries: the test binary lives in `deps/`
/// beneath it.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = artifact_dir().join("libphicover_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let compiled = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output();
    let compiled = match compiled {
        Ok(out) => out,
        Err(e) => panic!("no C compiler available: {e}"),
    };
    assert!(compiled.status.success(), "{}", String::from_utf8_lossy(&compiled.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "regions 2 tree2 1\n");
}
