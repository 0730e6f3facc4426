fn main() {
    std::process::exit(spgr::cli::run(std::env::args_os()));
}
