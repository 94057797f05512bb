import { defineConfig } from "vitest/config";

export default defineConfig({
  resolve: {
    // sources import "./x.js" (browser ESM specifiers); map back to the .ts files
    alias: [{ find: /^(\.{1,2}\/.*)\.js$/, replacement: "$1" }],
  },
  test: {
    environment: "jsdom",
    globalSetup: "./tests/global-setup.ts",
    testTimeout: 30_000,
    hookTimeout: 60_000,
  },
});
