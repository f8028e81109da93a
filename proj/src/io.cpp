#include "lattica/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lattica/error.hpp"

namespace lattica {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write '" + tmp.string() + "'");
        out << contents;
        out.flush();
        if (!out) throw InputError("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

}  // namespace lattica
