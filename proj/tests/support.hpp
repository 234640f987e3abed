#pragma once

#include <string>

#include <doctest.h>

#include "motivic/error.hpp"
#include "motivic/json_io.hpp"

inline motivic::Job fixture(const std::string& name) {
  return motivic::load_job(std::string(MOTIVIC_TEST_FIXTURES) + "/" + name + ".json");
}

template <class F>
motivic::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const motivic::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return motivic::ErrorKind::Schema;
}
