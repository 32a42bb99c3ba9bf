fn main() {
    std::process::exit(quasiorbit::cli::run(std::env::args_os()));
}
