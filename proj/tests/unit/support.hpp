#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "jcm/error.hpp"

#define EXPECT_JCM_ERROR(statement, expected_code)                                      \
    do {                                                                                \
        try {                                                                           \
            statement;                                                                  \
            ADD_FAILURE() << "no jcm::Error thrown by " #statement;                     \
        } catch (const jcm::Error& e) {                                                 \
            EXPECT_EQ(e.code(), expected_code) << e.what();                             \
        }                                                                               \
    } while (false)

namespace testing_support {

inline std::complex<double> random_alpha(std::mt19937_64& rng, double max_modulus) {
    std::uniform_real_distribution<double> mod(0.0, max_modulus);
    std::uniform_real_distribution<double> arg(-3.14159, 3.14159);
    return std::polar(mod(rng), arg(rng));
}

}  // namespace testing_support
