import { defineConfig } from 'vitest/config';

export default defineConfig({
  // Relative asset paths so the build works under `microresil serve --ui-dir`.
  base: './',
  build: { outDir: 'dist' },
  test: {
    environment: 'node',
    include: ['tests/**/*.test.ts'],
    setupFiles: ['tests/setup.ts'],
  },
});
