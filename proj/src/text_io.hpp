#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace frugal::detail {

/// Reads the next non-blank line with any '#' comment stripped and splits it
/// into unsigned integers. Returns false at end of input.
inline bool next_record(std::istream& in, std::vector<std::uint64_t>& fields, std::size_t& line_no)
{
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        fields.clear();
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            unsigned long long value = 0;
            try {
                if (tok.front() == '-')
                    throw std::invalid_argument(tok);
                value = std::stoull(tok, &used);
            } catch (const std::exception&) {
                throw std::runtime_error("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + tok + "'");
            }
            if (used != tok.size())
                throw std::runtime_error("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + tok + "'");
            fields.push_back(value);
        }
        if (!fields.empty())
            return true;
    }
    return false;
}

[[noreturn]] inline void parse_error(std::size_t line_no, const std::string& what)
{
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace frugal::detail
