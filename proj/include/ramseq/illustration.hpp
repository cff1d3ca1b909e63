#pragma once

#include <string_view>

#include "ramseq/attention.hpp"

namespace ramseq {

/// Three beverages: Coffee (A, utility 8), Tea (B, 6), Juice (D, 7), so
/// A > D > B. The attention rule specifies the ternary menu and the three
/// binary menus; singletons are implied.
///
///   S = {A,B,D}: {A,B} 0.3, {B,D} 0.4, {A,D} 0.2, {A,B,D} 0.1
///   S = {A,B}:   {A} 0.1, {B} 0.1, {A,B} 0.8
///   S = {A,D}:   {A} 0.1, {D} 0.1, {A,D} 0.8
///   S = {B,D}:   {B} 0.2, {D} 0.2, {B,D} 0.6
std::string_view illustration_document();
AttentionRule illustration_rule();

}  // namespace ramseq
