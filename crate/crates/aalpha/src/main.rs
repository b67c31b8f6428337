fn main() {
    aalpha::fuzz::configure_threads();
    std::process::exit(aalpha::cli::run(std::env::args_os()));
}
