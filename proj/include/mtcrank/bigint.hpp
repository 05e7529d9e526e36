#ifndef MTCRANK_BIGINT_HPP
#define MTCRANK_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtcrank
{

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(BigInt const &value)
{
  return value.str();
}

} // namespace mtcrank

#endif
