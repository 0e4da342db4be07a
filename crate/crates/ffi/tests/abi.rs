use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use planegraph_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { pg_string_free(s) };
    out
}

fn last_error() -> String {
    take(pg_last_error())
}

#[test]
fn gear_round_trip() {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { pg_gear_new(7, 8, &mut e) }, PgStatus::Ok);
    assert_eq!(unsafe { pg_embedding_vertex_count(e) }, 17);
    assert_eq!(unsafe { pg_embedding_verify(e) }, PgStatus::Ok);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { pg_embedding_to_json(e, &mut json) }, PgStatus::Ok);
    let text = take(json);
    let c = CString::new(text.clone()).unwrap();
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { pg_embedding_from_json(c.as_ptr(), &mut back) }, PgStatus::Ok);
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { pg_embedding_to_json(back, &mut again) }, PgStatus::Ok);
    assert_eq!(take(again), text);
    let (mut a, mut b) = (0u32, 0u32);
    for v in 0..17 {
        unsafe {
            pg_embedding_vertex_point(e, v, &mut a);
            pg_embedding_vertex_point(back, v, &mut b);
        }
        assert_eq!(a, b);
    }
    unsafe {
        pg_embedding_free(e);
        pg_embedding_free(back);
    }
}

#[test]
fn error_codes() {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { pg_wheel_new(5, 7, &mut e) }, PgStatus::ImpossibleDegree);
    assert!(last_error().contains('7'));
    assert!(e.is_null());
    assert_eq!(unsafe { pg_cycle_new(6, 5, 0, &mut e) }, PgStatus::InvalidArgument);
    assert_eq!(unsafe { pg_cycle_new(5, 5, 0, ptr::null_mut()) }, PgStatus::NullPointer);
    let bad = CString::new("{\"plane\":").unwrap();
    assert_eq!(unsafe { pg_embedding_from_json(bad.as_ptr(), &mut e) }, PgStatus::Parse);
    assert_eq!(unsafe { pg_embedding_vertex_point(ptr::null(), 0, ptr::null_mut()) }, PgStatus::NullPointer);
    assert_eq!(unsafe { pg_embedding_vertex_count(ptr::null()) }, 0);
    unsafe {
        pg_embedding_free(ptr::null_mut());
        pg_string_free(ptr::null_mut());
    }
}

#[test]
fn affine_cycle_and_exports() {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { pg_cycle_new(5, 25, 1, &mut e) }, PgStatus::Ok);
    assert_eq!(unsafe { pg_embedding_verify(e) }, PgStatus::Ok);
    unsafe { pg_embedding_free(e) };
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pg_plane_export(2, 0, &mut s) }, PgStatus::Ok);
    assert!(take(s).starts_with("{\"q\":2,\"points\":7,"));
    assert_eq!(unsafe { pg_hypj_certificate(4, &mut s) }, PgStatus::Ok);
    assert!(take(s).contains("EVEN_GOLOMB"));
    assert_eq!(unsafe { pg_hypj_certificate(3, &mut s) }, PgStatus::Ok);
    assert_eq!(take(s), "{\"q\":3,\"route\":\"NOT_FOUND\"}");
}

#[test]
fn header_matches_exports() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/planegraph.h")).unwrap();
    for name in [
        "pg_last_error",
        "pg_string_free",
        "pg_cycle_new",
        "pg_wheel_new",
        "pg_gear_new",
        "pg_embedding_from_json",
        "pg_embedding_to_json",
        "pg_embedding_vertex_count",
        "pg_embedding_vertex_point",
        "pg_embedding_verify",
        "pg_embedding_free",
        "pg_plane_export",
        "pg_hypj_certificate",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name}");
    }
    assert!(header.contains("typedef struct PgEmbedding PgEmbedding;"));
}

/// Compiles and runs a C client against the header and the static library
/// when a C compiler is on PATH.
#[test]
fn c_client() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; C client not built");
        return;
    };
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libplanegraph_ffi.a");
    if !lib.exists() {
        eprintln!("{} missing; C client not built", lib.display());
        return;
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("client.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include <string.h>
#include "planegraph.h"
int main(void) {
    PgEmbedding *e = NULL;
    if (pg_wheel_new(9, 10, &e) != PG_STATUS_OK) return 1;
    if (pg_embedding_vertex_count(e) != 11) return 2;
    if (pg_embedding_verify(e) != PG_STATUS_OK) return 3;
    pg_embedding_free(e);
    if (pg_gear_new(5, 7, &e) != PG_STATUS_IMPOSSIBLE_DEGREE) return 4;
    char *msg = pg_last_error();
    if (msg == NULL || strlen(msg) == 0) return 5;
    pg_string_free(msg);
    puts("ok");
    return 0;
}
"#,
    )
    .unwrap();
    let exe = tmp.path().join("client");
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(cc.to_string());
        }
    }
    Err(())
}
